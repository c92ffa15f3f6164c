"""Orders in the three-generated sphere-product algebra.

The ambient algebra has the eight monomials x_sigma as a Q-basis, indexed
by subset masks 0..7 in mask order.  An order is given by eight homogeneous
generators; verification checks closure exactly, decomposition splits off
the graded slices of the powers of the augmentation ideal, and the
classifier either produces a coefficient sequence with an isomorphism
witness onto the weighted model ring or certifies that none exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .alt2 import alt2, alt2_section
from .errors import (
    InternalCheckFailed,
    InvalidOrderInput,
    NotClosed,
    NotUnital,
    WrongRank,
)
from .lattices import Lattice, column_degree, intersect_subspace, \
    split_complement
from .matrices import IntMatrix, RatMatrix, rat_inverse, rat_solve
from .normal_forms import snf, snf_constrained_sl
from .rings import (
    CoefficientSequence,
    RingMapWitness,
    StructRing,
    build_weighted_ring,
    check_ring_map,
    mask_degree,
    mask_label,
    sign_of_product,
    weighted_basis_masks,
)

MASKS = tuple(range(8))
FULL_MASK = 0b111


def ambient_degrees(degrees):
    return tuple(mask_degree(m, degrees) for m in MASKS)


def r_multiply(u, v, degrees):
    """Product of two vectors in the monomial coordinates of the algebra."""
    out = [Fraction(0)] * 8
    for p in MASKS:
        up = u[p]
        if up == 0:
            continue
        for q in MASKS:
            vq = v[q]
            if vq == 0 or p & q:
                continue
            out[p | q] += up * vq * sign_of_product(p, q, degrees)
    return tuple(out)


def unit_vector():
    return tuple(Fraction(1) if m == 0 else Fraction(0) for m in MASKS)


@dataclass(frozen=True)
class OrderGenerator:
    degree: int
    vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "vector",
                           tuple(Fraction(x) for x in self.vector))
        if len(self.vector) != 8:
            raise InvalidOrderInput("generator vectors must have length 8")


class OrderInput:
    """Degrees plus eight homogeneous generators of a candidate order."""

    __slots__ = ("degrees", "generators")

    def __init__(self, degrees, generators):
        degrees = tuple(int(d) for d in degrees)
        if len(degrees) != 3 or any(d < 1 for d in degrees):
            raise InvalidOrderInput("three positive degrees are required")
        generators = tuple(
            g if isinstance(g, OrderGenerator) else OrderGenerator(*g)
            for g in generators)
        if len(generators) != 8:
            raise InvalidOrderInput("exactly eight generators are required")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "generators", generators)

    def __setattr__(self, *args):
        raise AttributeError("OrderInput is immutable")

    def to_json_obj(self):
        from .serialize import fraction_to_str
        return {
            "degrees": list(self.degrees),
            "generators": [
                {"degree": g.degree,
                 "vector": [fraction_to_str(x) for x in g.vector]}
                for g in self.generators],
        }

    @classmethod
    def from_json_obj(cls, obj):
        from .serialize import fraction_from_str
        return cls(obj["degrees"],
                   [(int(g["degree"]),
                     [fraction_from_str(x) for x in g["vector"]])
                    for g in obj["generators"]])


def monomial_order_input(degrees, coeffs=None):
    """The order generated by (1/c_sigma) x_sigma, in (degree, mask) order."""
    coeffs = coeffs or CoefficientSequence.ones()
    adeg = ambient_degrees(degrees)
    gens = []
    for mask in weighted_basis_masks(degrees):
        vec = [Fraction(0)] * 8
        vec[mask] = Fraction(1, coeffs.value(mask))
        gens.append(OrderGenerator(adeg[mask], tuple(vec)))
    return OrderInput(degrees, gens)


class _OrderContext:
    """Shared exact solvers for one order input."""

    def __init__(self, inp):
        self.degrees = inp.degrees
        self.adeg = ambient_degrees(inp.degrees)
        vectors = []
        for g in inp.generators:
            support_degrees = {self.adeg[m] for m in MASKS
                               if g.vector[m] != 0}
            if support_degrees and support_degrees != {g.degree}:
                raise InvalidOrderInput(
                    f"generator labelled degree {g.degree} is supported on "
                    f"degrees {sorted(support_degrees)}")
            if not support_degrees:
                raise InvalidOrderInput("zero generator")
            vectors.append(list(g.vector))
        # normalize the degree-0 generator to +1 so it can serve as unit
        for vec in vectors:
            if vec[0] != 0 and vec[0] < 0:
                for m in MASKS:
                    vec[m] = -vec[m]
        self.gen_vectors = [tuple(v) for v in vectors]
        self.basis = RatMatrix.from_columns(self.gen_vectors, rows=8)
        expected = sorted(self.adeg)
        got = sorted(g.degree for g in inp.generators)
        if expected != got:
            raise WrongRank(
                f"generator degrees {got} do not match the graded "
                f"dimensions {expected}")
        if self.basis.det() == 0:
            raise WrongRank("generators are linearly dependent")
        self.basis_inv = rat_inverse(self.basis)
        self.gen_degrees = tuple(g.degree for g in inp.generators)

    def coords(self, vector):
        return self.basis_inv.mul_vector(vector)

    def int_coords(self, vector):
        c = self.coords(vector)
        if any(x.denominator != 1 for x in c):
            return None
        return tuple(int(x) for x in c)

    def lattice(self):
        return Lattice(self.basis, check=False)


def verify_order(inp):
    """Check that the input generates an order; return its ring structure.

    Raises WrongRank, NotUnital or NotClosed when the input fails; the
    returned StructRing carries the integer structure constants of the
    order in its own (sign-normalized) generator basis.
    """
    ctx = _OrderContext(inp)
    if ctx.int_coords(unit_vector()) is None:
        raise NotUnital("the element 1 does not lie in the lattice")
    n = 8
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            product = r_multiply(ctx.gen_vectors[i], ctx.gen_vectors[j],
                                 ctx.degrees)
            coords = ctx.int_coords(product)
            if coords is None:
                raise NotClosed(
                    f"product of generators {i} and {j} escapes the "
                    f"lattice", left=i, right=j, product=product)
            row.append(tuple(Fraction(x) for x in coords))
        table.append(row)
    unit_index = next(i for i, g in enumerate(inp.generators)
                      if g.degree == 0)
    labels = tuple(f"g{i}" for i in range(n))
    return StructRing(labels, ctx.gen_degrees, table, unit_index=unit_index)


@dataclass(frozen=True)
class Decomposition:
    """Graded splitting unit + L1 + L2 + L3 of an order."""

    unit: tuple
    l1: Lattice
    l2: Lattice
    l3: Lattice
    ambient_degrees: tuple

    def part(self, i):
        return (self.l1, self.l2, self.l3)[i - 1]

    def part_degrees(self, i):
        return [column_degree(c, self.ambient_degrees)
                for c in self.part(i).basis_columns()]


def _power_intersection(ctx, power):
    """Degreewise intersection of the order with the given ideal power."""
    qualifying = [m for m in MASKS if bin(m).count("1") >= power]
    columns = []
    by_degree = {}
    for vec, deg in zip(ctx.gen_vectors, ctx.gen_degrees):
        by_degree.setdefault(deg, []).append(vec)
    for deg in sorted(by_degree):
        piece = Lattice.from_columns(by_degree[deg], ambient_dim=8,
                                     check=False)
        sub = [m for m in qualifying if ctx.adeg[m] == deg]
        if not sub:
            continue
        subspace = RatMatrix.from_columns(
            [tuple(Fraction(1) if k == m else Fraction(0) for k in MASKS)
             for m in sub], rows=8)
        inter = intersect_subspace(piece, subspace)
        columns.extend(inter.basis_columns())
    return Lattice.from_columns(columns, ambient_dim=8, check=False)


def decompose(inp, ring=None):
    """Split the order as unit (+) L1 (+) L2 (+) L3, homogeneously."""
    if ring is None:
        verify_order(inp)
    ctx = _OrderContext(inp)
    n1 = _power_intersection(ctx, 1)
    n2 = _power_intersection(ctx, 2)
    n3 = _power_intersection(ctx, 3)
    l3 = n3
    l2 = split_complement(n2, n3, ambient_degrees=ctx.adeg)
    l1 = split_complement(n1, n2, ambient_degrees=ctx.adeg)
    if (l1.rank, l2.rank, l3.rank) != (3, 3, 1):
        raise InternalCheckFailed(
            f"decomposition ranks are ({l1.rank}, {l2.rank}, {l3.rank})")
    dec = Decomposition(unit=unit_vector(), l1=l1, l2=l2, l3=l3,
                        ambient_degrees=ctx.adeg)
    if sorted(dec.part_degrees(1)) != sorted(inp.degrees):
        raise InternalCheckFailed(
            "degrees of the first slice do not match the input degrees")
    return dec


@dataclass(frozen=True)
class ClassificationResult:
    outcome: str   # "weighted" | "not_weighted_certified" | "inconclusive"
    coefficients: CoefficientSequence | None = None
    witness: RingMapWitness | None = None
    case: str = ""
    report: dict = field(default_factory=dict)

    @property
    def is_weighted(self):
        return self.outcome == "weighted"


def _match_basis_to_degrees(dec, degrees):
    """Pick L1 basis vectors b_k with the degree of position k."""
    pools = {}
    for col in dec.l1.basis_columns():
        pools.setdefault(column_degree(col, dec.ambient_degrees),
                         []).append(col)
    out = []
    for d in degrees:
        out.append(pools[d].pop(0))
    return out


def _scale_vec(vec, k):
    return tuple(k * x for x in vec)


def _add_vec(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _top_coefficient(ctx, vector):
    """Coefficient of a top-degree vector against the x_123 monomial."""
    return vector[FULL_MASK]


def _repair_square(ctx, dec, b, k):
    """Adjust b[k] within its degree slice so that it squares to zero.

    Returns (new_b_k, None) on success or (None, report) when no adjusted
    generator can square to zero, which certifies the order is not a
    weighted model.
    """
    vec = b[k]
    square = r_multiply(vec, vec, ctx.degrees)
    if all(x == 0 for x in square):
        return vec, None
    deg = ctx.degrees[k]
    corrections = [c for c in dec.l2.basis_columns()
                   if column_degree(c, ctx.adeg) == deg]
    # the square lives in the top degree slice, which has rank one
    if len(corrections) != 1:
        return None, {
            "reason": "square-zero obstruction",
            "position": k + 1,
            "detail": "no one-dimensional correction space",
        }
    z = corrections[0]
    z_square = r_multiply(z, z, ctx.degrees)
    cross = r_multiply(vec, z, ctx.degrees)
    if any(x != 0 for x in z_square):
        raise InternalCheckFailed("correction cell has a nonzero square")
    m0 = _top_coefficient(ctx, square)
    m1 = _top_coefficient(ctx, cross)
    # (b + t z)^2 = b^2 + 2 t (b z), so solve m0 + 2 t m1 = 0 over Z
    if m1 == 0 or (m0 % (2 * m1)) != 0:
        return None, {
            "reason": "square-zero obstruction",
            "position": k + 1,
            "family": "b + t*z with t an integer",
            "b": [str(x) for x in vec],
            "z": [str(x) for x in z],
            "square_form": [str(m0), str(2 * m1)],
            "detail": "no integer t solves m0 + (2 m1) t = 0",
        }
    t = -(m0 // (2 * m1))
    repaired = _add_vec(vec, _scale_vec(z, Fraction(t)))
    check = r_multiply(repaired, repaired, ctx.degrees)
    if any(x != 0 for x in check):
        raise InternalCheckFailed("square repair failed to close")
    return repaired, None


def _products_for_masks(ctx, b):
    """Ascending products b_sigma for every subset mask."""
    products = {0: unit_vector()}
    products[0b001] = b[0]
    products[0b010] = b[1]
    products[0b100] = b[2]
    products[0b011] = r_multiply(b[0], b[1], ctx.degrees)
    products[0b101] = r_multiply(b[0], b[2], ctx.degrees)
    products[0b110] = r_multiply(b[1], b[2], ctx.degrees)
    products[0b111] = r_multiply(products[0b011], b[2], ctx.degrees)
    return products


def _try_weighted_basis(ctx, ring, b):
    """Attempt to exhibit the order as the weighted model on basis b.

    Returns (coeffs, witness, None) on success, else (None, None, info)
    where info records the first graded piece that fails.
    """
    products = _products_for_masks(ctx, b)
    coords = {}
    for mask, vec in products.items():
        c = ctx.int_coords(vec)
        if c is None:
            return None, None, {"failure": "product escapes lattice",
                                "mask": mask}
        coords[mask] = c
    c_of = {}
    for mask in MASKS:
        g = 0
        for x in coords[mask]:
            g = gcd(g, x)
        if g == 0:
            return None, None, {"failure": "degenerate product",
                                "mask": mask}
        c_of[mask] = g
    if any(c_of[m] != 1 for m in (0, 0b001, 0b010, 0b100)):
        return None, None, {"failure": "generator not primitive"}

    by_degree = {}
    for mask in MASKS:
        by_degree.setdefault(ctx.adeg[mask], []).append(mask)
    for deg in sorted(by_degree):
        masks = by_degree[deg]
        block = [[Fraction(coords[m][i], c_of[m])
                  for m in masks]
                 for i, gd in enumerate(ctx.gen_degrees) if gd == deg]
        mat = RatMatrix(block, cols=len(masks))
        if not mat.is_integral() or abs(mat.to_int().det()) != 1:
            return None, None, {"failure": "graded piece has no basis of "
                                           "fractional monomials",
                                "degree": deg}
    for sigma in MASKS:
        for tau in MASKS:
            if sigma & tau or not sigma or not tau:
                continue
            if c_of[sigma | tau] % (c_of[sigma] * c_of[tau]) != 0:
                return None, None, {"failure": "divisibility law fails",
                                    "masks": (sigma, tau)}
    coeffs = CoefficientSequence(c12=c_of[0b011], c13=c_of[0b101],
                                 c23=c_of[0b110], c123=c_of[0b111])
    masks_order = weighted_basis_masks(ctx.degrees)
    columns = [[Fraction(coords[m][i], c_of[m]) for i in range(8)]
               for m in masks_order]
    witness = RingMapWitness(RatMatrix.from_columns(columns, rows=8))
    model = build_weighted_ring(coeffs, ctx.degrees)
    if not check_ring_map(witness, model, ring):
        return None, None, {"failure": "witness rejected"}
    return coeffs, witness, None


def _degree_pattern(degrees):
    d1, d2, d3 = degrees
    if d1 == d2 == d3:
        return "all-equal"
    if d1 == d2 or d1 == d3 or d2 == d3:
        return "two-equal"
    return "all-distinct"


def _repeated_even(degrees):
    return any(degrees.count(v) >= 2 and v % 2 == 0 for v in degrees)


def _l2_piece_coords(ctx, dec, vectors, degree):
    """Coordinates of vectors in the degree slice of the second part."""
    cols = [c for c in dec.l2.basis_columns()
            if column_degree(c, ctx.adeg) == degree]
    piece = RatMatrix.from_columns(cols, rows=8)
    out = []
    for v in vectors:
        x = rat_solve(piece, v)
        if x is None or any(f.denominator != 1 for f in x):
            raise InternalCheckFailed(
                "pair product misses the expected graded slice")
        out.append([int(f) for f in x])
    return out, len(cols)


def classify_order(inp, height_bound=8):
    """Classify an order: weighted model (with witness) or a certificate.

    Degree patterns with a repeated even degree go through the bounded
    square-zero search; all other patterns follow the three-case basis
    normalization (with a square repair in the even coincidence degrees).
    """
    ring = verify_order(inp)
    ctx = _OrderContext(inp)
    if _repeated_even(inp.degrees):
        return not_weighted_search(inp, height_bound)
    dec = decompose(inp, ring)
    b = _match_basis_to_degrees(dec, inp.degrees)

    for k in range(3):
        if ctx.degrees[k] % 2 == 0:
            repaired, obstruction = _repair_square(ctx, dec, b, k)
            if obstruction is not None:
                return ClassificationResult(
                    outcome="not_weighted_certified",
                    case=_degree_pattern(inp.degrees),
                    report=obstruction)
            b[k] = repaired

    pattern = _degree_pattern(inp.degrees)
    if pattern == "all-equal":
        pair_products = [r_multiply(b[0], b[1], ctx.degrees),
                         r_multiply(b[0], b[2], ctx.degrees),
                         r_multiply(b[1], b[2], ctx.degrees)]
        coords, size = _l2_piece_coords(ctx, dec, pair_products,
                                        2 * ctx.degrees[0])
        if size != 3:
            raise InternalCheckFailed("expected a rank-3 middle slice")
        x = IntMatrix.from_columns(coords, rows=3)
        res = snf_constrained_sl(x, side="right")
        y = alt2_section(res.V)
        if alt2(y) != res.V:
            raise InternalCheckFailed("section failed to invert alt2")
        new_b = []
        for j in range(3):
            vec = (Fraction(0),) * 8
            for i in range(3):
                vec = _add_vec(vec, _scale_vec(b[i],
                                               Fraction(y.entry(i, j))))
            new_b.append(vec)
        b = new_b
    elif pattern == "two-equal":
        positions = [k for k in range(3)
                     if ctx.degrees.count(ctx.degrees[k]) == 2]
        p, q = positions
        r = next(k for k in range(3) if k not in positions)
        prods = [r_multiply(b[p], b[r], ctx.degrees),
                 r_multiply(b[q], b[r], ctx.degrees)]
        coords, size = _l2_piece_coords(
            ctx, dec, prods, ctx.degrees[p] + ctx.degrees[r])
        if size != 2:
            raise InternalCheckFailed("expected a rank-2 middle slice")
        x0 = IntMatrix.from_columns(coords, rows=2)
        res = snf(x0)
        v0 = res.V
        bp = _add_vec(_scale_vec(b[p], Fraction(v0.entry(0, 0))),
                      _scale_vec(b[q], Fraction(v0.entry(1, 0))))
        bq = _add_vec(_scale_vec(b[p], Fraction(v0.entry(0, 1))),
                      _scale_vec(b[q], Fraction(v0.entry(1, 1))))
        b[p], b[q] = bp, bq

    coeffs, witness, info = _try_weighted_basis(ctx, ring, b)
    if info is not None:
        raise InternalCheckFailed(
            f"normalized basis failed verification: {info}")
    return ClassificationResult(outcome="weighted", coefficients=coeffs,
                                witness=witness, case=pattern,
                                report={"basis": [[str(x) for x in vec]
                                                  for vec in b]})


def _binary_square_zero_lines(ctx, g1, g2):
    """Rational lines where (alpha g1 + beta g2)^2 vanishes.

    Returns (lines, certified): primitive integer direction vectors, and
    whether the list provably exhausts all square-zero directions.
    """
    a2 = r_multiply(g1, g1, ctx.degrees)
    c2 = r_multiply(g2, g2, ctx.degrees)
    cross = _add_vec(r_multiply(g1, g2, ctx.degrees),
                     r_multiply(g2, g1, ctx.degrees))
    if all(x == 0 for x in a2) and all(x == 0 for x in c2) and \
            all(x == 0 for x in cross):
        return None, False   # the whole plane squares to zero
    lines = []
    if all(x == 0 for x in a2):
        lines.append((1, 0))
    # solutions with beta != 0, parametrized by tau = alpha/beta:
    # tau^2 a2 + tau cross + c2 = 0 componentwise
    taus = None
    for idx in MASKS:
        p, r, s = a2[idx], cross[idx], c2[idx]
        if p == 0 and r == 0 and s == 0:
            continue
        roots = set()
        if p == 0:
            if r != 0:
                roots.add(Fraction(-s, r))
        else:
            disc = r * r - 4 * p * s
            if disc >= 0:
                root = _exact_sqrt(disc)
                if root is not None:
                    roots.add(Fraction(-r + root, 2 * p))
                    roots.add(Fraction(-r - root, 2 * p))
        taus = roots if taus is None else taus & roots
        if not taus:
            break
    for tau in sorted(taus or ()):
        num, den = tau.numerator, tau.denominator
        if all(num * num * a2[i] + num * den * cross[i] +
               den * den * c2[i] == 0 for i in MASKS):
            lines.append((num, den))
    return lines, True


def _exact_sqrt(n):
    if n < 0:
        return None
    root = int(n ** 0.5)
    for cand in (root - 1, root, root + 1, root + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def _canonical_sign(vec):
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-v for v in vec)
    return vec


def not_weighted_search(inp, height_bound=8):
    """Bounded search for a square-zero weighted generating set.

    Enumerates primitive square-zero elements of each generator-degree
    slice; rank-one and rank-two slices are analyzed exactly, so a failed
    exhaustive list certifies the order is not a weighted model.  Rank-
    three slices (and all-square-zero planes) fall back to coordinates
    bounded by height_bound, and failure is then inconclusive.
    """
    ring = verify_order(inp)
    ctx = _OrderContext(inp)
    dec = decompose(inp, ring)

    gens_by_degree = {}
    for vec, deg in zip(ctx.gen_vectors, ctx.gen_degrees):
        gens_by_degree.setdefault(deg, []).append(vec)

    l1_cols = dec.l1.basis_columns()
    all_parts = RatMatrix.from_columns(
        l1_cols + dec.l2.basis_columns() + dec.l3.basis_columns(), rows=8)

    def l1_image(vector):
        x = rat_solve(all_parts, vector)
        if x is None or any(f.denominator != 1 for f in x):
            return None
        return tuple(int(f) for f in x[:3])

    def candidates_for_degree(deg):
        gens = gens_by_degree[deg]
        rank = len(gens)
        found = []
        certified = True
        if rank == 1:
            g = gens[0]
            if all(x == 0 for x in r_multiply(g, g, ctx.degrees)):
                found.append(g)
        elif rank == 2:
            lines, certified = _binary_square_zero_lines(ctx, *gens)
            if lines is None:
                certified = False
                bound = height_bound
                for a in range(-bound, bound + 1):
                    for bb in range(bound + 1):
                        if gcd(a, bb) != 1:
                            continue
                        vec = _add_vec(_scale_vec(gens[0], Fraction(a)),
                                       _scale_vec(gens[1], Fraction(bb)))
                        found.append(vec)
            else:
                for (a, bb) in lines:
                    vec = _add_vec(_scale_vec(gens[0], Fraction(a)),
                                   _scale_vec(gens[1], Fraction(bb)))
                    found.append(vec)
        else:
            certified = False
            bound = height_bound
            seen = set()
            for a in range(-bound, bound + 1):
                for bb in range(-bound, bound + 1):
                    for cc in range(bound + 1):
                        if gcd(gcd(a, bb), cc) != 1:
                            continue
                        key = _canonical_sign((a, bb, cc))
                        if key in seen:
                            continue
                        seen.add(key)
                        vec = _add_vec(
                            _add_vec(_scale_vec(gens[0], Fraction(a)),
                                     _scale_vec(gens[1], Fraction(bb))),
                            _scale_vec(gens[2], Fraction(cc)))
                        if all(x == 0 for x in
                               r_multiply(vec, vec, ctx.degrees)):
                            found.append(vec)
        kept = []
        for vec in found:
            img = l1_image(vec)
            if img is None:
                continue
            g = 0
            for x in img:
                g = gcd(g, x)
            if g == 1:
                kept.append(_canonical_sign(vec))
        deduped = []
        for vec in kept:
            if vec not in deduped:
                deduped.append(vec)
        return deduped, certified

    degree_values = sorted(set(inp.degrees))
    candidates = {}
    certified_all = True
    for deg in degree_values:
        cands, certified = candidates_for_degree(deg)
        candidates[deg] = cands
        certified_all = certified_all and certified

    failures = []
    import itertools
    pools = [candidates[d] for d in inp.degrees]
    for combo in itertools.product(*pools):
        if len({tuple(c) for c in combo}) < 3:
            continue
        images = [l1_image(vec) for vec in combo]
        if any(img is None for img in images):
            continue
        if abs(IntMatrix.from_columns(images, rows=3).det()) != 1:
            continue
        coeffs, witness, info = _try_weighted_basis(ctx, ring, list(combo))
        if info is None:
            return ClassificationResult(
                outcome="weighted", coefficients=coeffs, witness=witness,
                case="search",
                report={"basis": [[str(x) for x in vec] for vec in combo]})
        failures.append({
            "basis": [[str(x) for x in vec] for vec in combo],
            "failure": info,
        })

    report = {
        "candidates_by_degree": {
            str(deg): [[str(x) for x in vec] for vec in
                       _with_signs(candidates[deg])]
            for deg in degree_values},
        "failures": failures,
        "height_bound": height_bound,
        "exhaustive": certified_all,
    }
    outcome = "not_weighted_certified" if certified_all else "inconclusive"
    return ClassificationResult(outcome=outcome, case="search",
                                report=report)


def _with_signs(vectors):
    out = []
    for vec in vectors:
        out.append(vec)
        out.append(tuple(-x for x in vec))
    return out
