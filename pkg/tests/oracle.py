"""Independent brute-force oracle for monomial instances.

For the sequence (x_1, .., x_c) in exactly c variables every finite-level
cyclic summand R/J_S(a) has the monomial box basis
{x^e : e_j = 0 for j not in S, e_i < a for i in S}, so complexes, kernels,
cohomology, transitions, and death levels reduce to exhaustive enumeration
plus linear algebra over F_p.  Everything here is computed from scratch on
exponent boxes; no Groebner machinery is involved.
"""

from itertools import combinations, product


# ---------------------------------------------------------------------------
# Linear algebra over F_p (dense row-reduction on lists of ints)


def rref(rows, p):
    """Row-reduce a copy of the matrix; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] % p:
                factor = m[i][col]
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, p):
    return len(rref(rows, p)[0])


def in_span(rows, vec, p):
    """True iff vec lies in the row span of rows."""
    if all(v % p == 0 for v in vec):
        return True
    if not rows:
        return False
    return rank(rows, p) == rank(list(rows) + [list(vec)], p)


def nullspace(rows, ncols, p):
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    reduced, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-reduced[r][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Exponent boxes


def colex_subsets(c, size):
    return sorted(combinations(range(1, c + 1), size), key=lambda T: tuple(reversed(T)))


class Box:
    """Monomial basis of R/J_S(a): coordinates j not in S are pinned to 0,
    coordinates in S run through [0, a)."""

    def __init__(self, S, a, c):
        self.dims = tuple(a if (i + 1) in set(S) else 1 for i in range(c))
        self.monomials = list(product(*(range(d) for d in self.dims)))
        self.index = {m: k for k, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)


def mult_matrix(src: Box, dst: Box, shift, p, coeff=1):
    """Matrix (rows=dst, cols=src) of multiplication by coeff * x^shift."""
    rows = [[0] * len(src) for _ in range(len(dst))]
    for k, m in enumerate(src.monomials):
        target = tuple(e + s for e, s in zip(m, shift))
        if all(t < d for t, d in zip(target, dst.dims)):
            rows[dst.index[target]][k] = coeff % p
    return rows


def hstack(blocks):
    """Concatenate matrices horizontally (same row count)."""
    nrows = len(blocks[0])
    return [[v for blk in blocks for v in blk[row]] for row in range(nrows)]


class LevelModel:
    """All boxes, differentials, and transitions of one (c, a, p) level."""

    def __init__(self, c, a, p):
        self.c, self.a, self.p = c, a, p
        self.labels = [colex_subsets(c, i) for i in range(c + 1)]
        self.boxes = [[Box(S, a, c) for S in self.labels[i]] for i in range(c + 1)]

    def degree_dim(self, i):
        return sum(len(b) for b in self.boxes[i])

    def differential(self, i):
        """Matrix of the degree-i differential on box coordinates."""
        c, a, p = self.c, self.a, self.p
        col_blocks = []
        for s_idx, S in enumerate(self.labels[i]):
            row_blocks = []
            for T in self.labels[i + 1]:
                Sset, Tset = set(S), set(T)
                if Sset < Tset and len(Tset - Sset) == 1:
                    (j,) = Tset - Sset
                    pos = sorted(T).index(j) + 1
                    sign = (-1) ** pos
                    shift = tuple((a - 1) if k + 1 == j else 0 for k in range(c))
                    blk = mult_matrix(
                        self.boxes[i][s_idx], Box(T, a, c), shift, p, coeff=sign
                    )
                else:
                    blk = [[0] * len(self.boxes[i][s_idx]) for _ in range(len(Box(T, a, c)))]
                row_blocks.append(blk)
            col_blocks.append([row for blk in row_blocks for row in blk])
        return hstack(col_blocks)


def transition_matrix(model_a: LevelModel, model_b: LevelModel, i):
    """Block-diagonal multiplication by f_S^(b-a) from level a to level b."""
    c, p = model_a.c, model_a.p
    step = model_b.a - model_a.a
    col_blocks = []
    for s_idx, S in enumerate(model_a.labels[i]):
        row_blocks = []
        for t_idx, T in enumerate(model_b.labels[i]):
            if t_idx == s_idx:
                shift = tuple(step if k + 1 in set(S) else 0 for k in range(c))
                blk = mult_matrix(model_a.boxes[i][s_idx], model_b.boxes[i][t_idx], shift, p)
            else:
                blk = [
                    [0] * len(model_a.boxes[i][s_idx])
                    for _ in range(len(model_b.boxes[i][t_idx]))
                ]
            row_blocks.append(blk)
        col_blocks.append([row for blk in row_blocks for row in blk])
    return hstack(col_blocks)


def matvec(rows, vec, p):
    return [sum(a * b for a, b in zip(row, vec)) % p for row in rows]


def columns(rows):
    if not rows:
        return []
    return [[rows[r][c] for r in range(len(rows))] for c in range(len(rows[0]))]


def image_rows(model: LevelModel, i):
    """Spanning rows of im d^(i-1) in the degree-i coordinate space."""
    if i == 0:
        return []
    return columns(model.differential(i - 1))


def cohomology_dim(model: LevelModel, i):
    """dim ker d^i - dim im d^(i-1) (d^c treated as the zero map)."""
    dim = model.degree_dim(i)
    if i < model.c:
        d_i = model.differential(i)
        kernel_dim = dim - rank(columns(d_i), model.p)
    else:
        kernel_dim = dim
    return kernel_dim - rank(image_rows(model, i), model.p)


def cohomology_class_vectors(model: LevelModel, i):
    """Coordinate vectors spanning ker d^i modulo im d^(i-1)."""
    dim = model.degree_dim(i)
    if i < model.c:
        kernel = nullspace(model.differential(i), dim, model.p)
    else:
        kernel = [[1 if k == j else 0 for k in range(dim)] for j in range(dim)]
    image = image_rows(model, i)
    classes = []
    span = [list(r) for r in image]
    for v in kernel:
        if not in_span(span, v, model.p):
            classes.append(v)
            span.append(list(v))
    return classes


def death_level(c, p, a, i, vec, bound):
    """Minimal level b <= bound at which the transition image of vec lands
    in the coboundaries, or None."""
    model_a = LevelModel(c, a, p)
    for b in range(a, bound + 1):
        model_b = LevelModel(c, b, p)
        tau = transition_matrix(model_a, model_b, i)
        image = matvec(tau, vec, p)
        if in_span(image_rows(model_b, i), image, p):
            return b
    return None


def poly_terms_to_box(terms, box: Box, p):
    """Coordinates of a polynomial given as (exponent tuple, coeff) pairs;
    exponents outside the box lie in the summand ideal and drop out."""
    vec = [0] * len(box)
    for mono, coeff in terms:
        if all(e < d for e, d in zip(mono, box.dims)):
            vec[box.index[mono]] = (vec[box.index[mono]] + coeff) % p
    return vec


def vector_to_box(vecs_terms, boxes, p):
    """Concatenate per-summand polynomial coordinates into a degree vector."""
    out = []
    for terms, box in zip(vecs_terms, boxes):
        out.extend(poly_terms_to_box(terms, box, p))
    return out


def monomial_ideal_member(gen_exponents, poly_terms):
    """Membership in a monomial ideal: every term must be divisible by some
    generator exponent vector."""
    def divisible(mono):
        return any(all(g <= m for g, m in zip(gen, mono)) for gen in gen_exponents)

    return all(divisible(mono) for mono, _ in poly_terms)
