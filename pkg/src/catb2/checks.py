"""Executable identity checks over the Cat(B2, m) constructions.

Every check compares two independently built exact values and returns a
CheckReport; nothing here raises on a mathematical mismatch (only on
out-of-domain parameters).  A failed report always carries a witness: the
serialized nonzero difference or remainder that falsifies the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import (
    basis_derivation,
    defining_poly,
    deformed_poly,
    deformed_term,
    halfint_closed,
    halfint_combo,
    halfint_tail,
    saito_constant,
    saito_constant_integral,
    saito_determinant,
    tail_closed,
    tail_combo,
    telescope_cleared_sides,
)
from .poly import (
    BiPoly,
    LinearForm,
    UniPoly,
    UniRatFunc,
    XMY_FORM,
    XPY_FORM,
    X_FORM,
    Y_FORM,
    ff_unipoly,
)

# Registry order is also the report order used by the CLI sweep.
CHECK_NAMES = (
    "expansion",
    "ftilde-forms",
    "lemma1",
    "lemma2",
    "lemma3",
    "prop1",
    "prop2",
    "prop3",
    "theorem",
    "v-recurrence",
    "saito",
    "membership",
    "parity",
    "degree",
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification: name, parameters, verdict, witness."""

    check_name: str
    params: tuple[tuple[str, int], ...]
    passed: bool
    witness: str | None = None
    data: dict[str, str] | None = None

    def __post_init__(self) -> None:
        if self.passed == (self.witness is not None):
            raise ValueError("witness must be present exactly when the check fails")


def _report(
    name: str,
    params: tuple[tuple[str, int], ...],
    witness: str | None,
    data: dict[str, str] | None = None,
) -> CheckReport:
    return CheckReport(name, params, passed=witness is None, witness=witness, data=data)


def _bipoly_diff(lhs: BiPoly, rhs: BiPoly) -> str | None:
    diff = lhs - rhs
    return diff.to_text() if diff else None


def check_expansion(i: int, m: int) -> CheckReport:
    """Coefficient form of the integral polynomial vs direct integration."""
    from .constructions import integral_poly, poly_from_coeffs

    witness = _bipoly_diff(poly_from_coeffs(i, m), integral_poly(i, m))
    return _report("expansion", (("i", i), ("m", m)), witness)


def check_ftilde_forms(i: int, m: int) -> CheckReport:
    """Twice the deformation equals the sum of its expansion summands."""
    total = BiPoly.zero()
    for u in range(m + 1):
        total = total + deformed_term(i, m, u)
    witness = _bipoly_diff(deformed_poly(i, m) * 2, total)
    return _report("ftilde-forms", (("i", i), ("m", m)), witness)


def check_lemma1(i: int, m: int, l: int) -> CheckReport:
    """Tail combination equals its closed form (zero at l = m+1)."""
    witness = _bipoly_diff(tail_combo(i, m, l), tail_closed(i, m, l))
    return _report("lemma1", (("i", i), ("m", m), ("l", l)), witness)


def check_lemma2(a: int, b: int) -> CheckReport:
    """Telescoping sum identity, compared after clearing (z+b)_(2b+2)."""
    lhs, rhs = telescope_cleared_sides(a, b)
    diff = lhs - rhs
    witness = diff.to_text("z") if diff else None
    return _report("lemma2", (("a", a), ("b", b)), witness)


def check_lemma3(i: int, m: int, k: int, l: int) -> CheckReport:
    """Half-integer tail combination equals its closed form."""
    diff = halfint_combo(i, m, k, l).cross_diff(halfint_closed(i, m, k, l))
    witness = diff.to_text("y") if diff else None
    return _report("lemma3", (("i", i), ("m", m), ("k", k), ("l", l)), witness)


def check_prop1(i: int, m: int) -> CheckReport:
    """Three-term recurrence between consecutive family members (i >= 1):

    (2i-1)/(2m+2) ft[i-1,m+1] = (x^2+y^2-(i+m+1)^2-i^2) ft[i,m] - 2 ft[i+1,m].
    """
    if i < 1:
        raise ValueError("index i-1 undefined")
    lhs = deformed_poly(i - 1, m + 1) * Fraction(2 * i - 1, 2 * m + 2)
    quad = BiPoly({(2, 0): 1, (0, 2): 1, (0, 0): -((i + m + 1) ** 2 + i * i)})
    rhs = quad * deformed_poly(i, m) - deformed_poly(i + 1, m) * 2
    return _report("prop1", (("i", i), ("m", m)), _bipoly_diff(lhs, rhs))


def check_prop2(i: int, m: int, k: int) -> CheckReport:
    """2*ft[i,m](-1/2-k, y) equals the half-integer evaluation series."""
    lhs = (deformed_poly(i, m) * 2).subst_value("x", Fraction(-(2 * k + 1), 2))
    diff = UniRatFunc.from_poly(lhs).cross_diff(halfint_tail(i, m, k, 0))
    witness = diff.to_text("y") if diff else None
    return _report("prop2", (("i", i), ("m", m), ("k", k)), witness)


def _split_cofactor(p: UniPoly, d: UniPoly) -> tuple[Fraction, UniPoly]:
    """Best constant lam for p = lam*d plus the residual p - lam*d."""
    lam = Fraction(0)
    if p and d:
        lam = p.coeff(p.degree()) / d.coeff(d.degree())
    return lam, p - d * lam


def check_prop3(i: int, m: int) -> CheckReport:
    """Congruences of 2*ft[i,m] modulo x+y+m and x+y-m.

    mod x+y+m:  2*ft =  A (x+2m+i)_(3m+2i+1) (x+m-1/2)_m
                     = -A (y+2m+i)_(3m+2i+1) (y+m-1/2)_m
    mod x+y-m:  2*ft =  B (x+m+i)_(3m+2i+1) (x-1/2)_m
                     = -B (y+m+i)_(3m+2i+1) (y-1/2)_m
    with A, B depending only on (i, m); they are extracted, then the three
    companion congruences are verified against them.
    """
    doubled = deformed_poly(i, m) * 2
    length = 3 * m + 2 * i + 1
    params = (("i", i), ("m", m))

    cases = (
        # (root shift for y -> -x + s / x -> -y + s, x shift, half shift)
        (-m, 2 * m + i, Fraction(2 * m - 1, 2)),  # modulo x+y+m
        (m, m + i, Fraction(-1, 2)),  # modulo x+y-m
    )
    extracted: list[Fraction] = []
    for root_shift, ff_shift, half_shift in cases:
        in_x = doubled.subst_affine("y", -1, "x", root_shift).as_unipoly("x")
        target = ff_unipoly(ff_shift, length) * ff_unipoly(half_shift, m)
        lam, residual = _split_cofactor(in_x, target)
        if residual:
            return _report("prop3", params, residual.to_text("x"))
        in_y = doubled.subst_affine("x", -1, "y", root_shift).as_unipoly("y")
        companion = in_y + target * lam  # must equal -lam * target
        if companion:
            return _report("prop3", params, companion.to_text("y"))
        extracted.append(lam)

    a_const, b_const = extracted
    return _report("prop3", params, None, data={"A": str(a_const), "B": str(b_const)})


def _first_remainder(
    p: BiPoly, form: LinearForm, shift: int, count: int
) -> UniPoly | None:
    """First nonzero remainder of p modulo form+shift-j, j = 0..count-1."""
    for j in range(count):
        rem = form.shifted(shift - j).reduce_mod(p)
        if rem:
            return rem
    return None


def check_theorem(i: int, m: int) -> CheckReport:
    """ft[i,m](x,y) + ft[i,m](y,x) is divisible by prod_{|j|<=m} (x+y+j)."""
    f = deformed_poly(i, m)
    rem = _first_remainder(f + f.swap(), XPY_FORM, m, 2 * m + 1)
    witness = rem.to_text("y") if rem is not None else None
    return _report("theorem", (("i", i), ("m", m)), witness)


def check_v_recurrence(i: int, m: int) -> CheckReport:
    """Recurrence for V[i,m] = ft[i,m](x,y) + ft[i,m](y,x), for m >= 1:

    (2i+1)/(2m) V[i,m] = (x^2+y^2-(i+m+1)^2-(i+1)^2) V[i+1,m-1] - 2 V[i+2,m-1].
    """
    if m < 1:
        raise ValueError("recurrence needs m >= 1")

    def symmetrized(ii: int, mm: int) -> BiPoly:
        f = deformed_poly(ii, mm)
        return f + f.swap()

    lhs = symmetrized(i, m) * Fraction(2 * i + 1, 2 * m)
    quad = BiPoly(
        {(2, 0): 1, (0, 2): 1, (0, 0): -((i + m + 1) ** 2 + (i + 1) ** 2)}
    )
    rhs = quad * symmetrized(i + 1, m - 1) - symmetrized(i + 2, m - 1) * 2
    return _report("v-recurrence", (("i", i), ("m", m)), _bipoly_diff(lhs, rhs))


def check_saito(m: int) -> CheckReport:
    """Saito criterion: determinant = C * defining polynomial, C nonzero.

    Also requires the two routes to C (coefficient product vs the two exact
    integrals) to agree, and the x^(6m+3) y^(2m+1) coefficient of the
    determinant to be C times that coefficient of the defining polynomial.
    """
    params = (("m", m),)
    c = saito_constant(m)
    data = {"C": str(c)}
    c_int = saito_constant_integral(m)
    if c == 0 or c != c_int:
        witness = BiPoly.const(c - c_int).to_text() if c else "0"
        return _report("saito", params, witness, data=data)
    det = saito_determinant(m)
    phi = defining_poly(m)
    if det.coeff(6 * m + 3, 2 * m + 1) != c * phi.coeff(6 * m + 3, 2 * m + 1):
        return _report("saito", params, (det - phi * c).to_text(), data=data)
    witness = _bipoly_diff(det, phi * c)
    return _report("saito", params, witness, data=data)


def check_membership(i: int, m: int) -> CheckReport:
    """The candidate derivation lies in the module of logarithmic fields:

    applying it to each of the four hyperplane families x, y, x+y, x-y
    yields a polynomial divisible by the full shifted product of that family.
    """
    der = basis_derivation(i, m)
    for form in (X_FORM, Y_FORM, XPY_FORM, XMY_FORM):
        rem = _first_remainder(der.apply_linear(form), form, m, 2 * m + 1)
        if rem is not None:
            var = "x" if form.a == 0 else "y"
            return _report("membership", (("i", i), ("m", m)), rem.to_text(var))
    return _report("membership", (("i", i), ("m", m)), None)


def check_parity(i: int, m: int) -> CheckReport:
    """ft[i,m] is odd in x and even in y."""
    f = deformed_poly(i, m)
    odd = f.subst_affine("x", -1, "x") + f
    if odd:
        return _report("parity", (("i", i), ("m", m)), odd.to_text())
    even = f.subst_affine("y", -1, "y") - f
    witness = even.to_text() if even else None
    return _report("parity", (("i", i), ("m", m)), witness)


def check_degree(i: int, m: int) -> CheckReport:
    """Total degrees: deg ft[i,m] = 4m+2i+1 and deg of the defining poly = 8m+4."""
    f = deformed_poly(i, m)
    if f.degree() != 4 * m + 2 * i + 1:
        return _report("degree", (("i", i), ("m", m)), f.to_text())
    phi = defining_poly(m)
    witness = phi.to_text() if phi.degree() != 8 * m + 4 else None
    return _report("degree", (("i", i), ("m", m)), witness)
