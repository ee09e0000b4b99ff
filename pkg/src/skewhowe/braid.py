"""
Braiding elements on ladders and the closure of braids into sl(N) link polynomials.

For lam_i >= lam_{i+1}

    T_i 1_lam = q^{(m-n) lam_i lam_{i+1} - lam_i} sum_s (-q)^s F_i^(lam_i - lam_{i+1} + s) E_i^(s) 1_lam

and for lam_i <= lam_{i+1} the same with E_i^(lam_{i+1} - lam_i + s) F_i^(s). Both
sums stop once a divided power would leave the nonnegative weights.
"""

from dataclasses import dataclass
from functools import lru_cache

from .qarith import RatFuncQ, LaurentPoly, RZERO
from .linalg import LinearMapQ
from .ladder import LadderElement, LadderWord, RungOp, eval_ladder, weight_space
from .superrep import generator_matrix, generators


def swap(lam, i):
    lam = list(lam)
    lam[i - 1], lam[i] = lam[i], lam[i - 1]
    return tuple(lam)


def _mono(e, c=1):
    return RatFuncQ.from_laurent(LaurentPoly.monomial(e, c))


def _rungs(lam, ops):
    rungs = tuple(RungOp(k, i, r) for k, i, r in ops if r > 0)
    return LadderWord(tuple(lam), rungs)


@dataclass
class BraidGeneratorElement:
    i: int
    lam: tuple
    m: int
    n: int
    variant: str
    prefactor: RatFuncQ
    element: LadderElement


def braiding_element(i, lam, m, n, variant="plus"):
    """T_i 1_lam as a ladder element from lam to s_i(lam).

    ``variant="minus"`` reads the divided power as lam_i - lam_{i+1} - s (resp.
    lam_{i+1} - lam_i - s); only terms that land in s_i(lam) are kept.
    """
    lam = tuple(lam)
    a, b = lam[i - 1], lam[i]
    pre = _mono((m - n) * a * b - a)
    terms = {}
    for s in range(0, max(a, b) + 1):
        c = _mono(s, (-1) ** s) * pre
        if a >= b:
            top = a - b + s if variant == "plus" else a - b - s
            ops = [("E", i, s), ("F", i, top)]
        else:
            top = b - a + s if variant == "plus" else b - a - s
            ops = [("F", i, s), ("E", i, top)]
        if top < 0:
            continue
        w = _rungs(lam, ops)
        if w.annihilated() or w.target != swap(lam, i):
            continue
        terms[w] = terms.get(w, RZERO) + c
    el = LadderElement(terms, lam, swap(lam, i))
    return BraidGeneratorElement(i, lam, m, n, variant, pre, el)


def braiding_inverse_element(i, lam, m, n):
    """T_i^{-1} 1_lam as a ladder element from lam to s_i(lam).

    Obtained from T_i by q -> q^-1 with the two rung orders exchanged;
    check_braid_relations compares it with the exact matrix inverse.
    """
    lam = tuple(lam)
    a, b = lam[i - 1], lam[i]
    pre = _mono(-((m - n) * a * b - b))
    terms = {}
    for s in range(0, max(a, b) + 1):
        c = _mono(-s, (-1) ** s) * pre
        if a >= b:
            ops = [("E", i, s), ("F", i, a - b + s)]
        else:
            ops = [("F", i, s), ("E", i, b - a + s)]
        w = _rungs(lam, ops)
        if w.annihilated() or w.target != swap(lam, i):
            continue
        terms[w] = terms.get(w, RZERO) + c
    return LadderElement(terms, lam, swap(lam, i))


@lru_cache(maxsize=None)
def braiding_matrix(i, lam, m, n, variant="plus"):
    return eval_ladder(braiding_element(i, tuple(lam), m, n, variant).element, m, n)


@lru_cache(maxsize=None)
def braiding_inverse(i, lam, m, n):
    """Matrix of T_i^{-1} from lam to s_i(lam), the inverse of T_i at s_i(lam)."""
    lam = tuple(lam)
    T = braiding_matrix(i, swap(lam, i), m, n)
    if T.nrows == 0:
        return LinearMapQ.zeros(0, 0)
    return T.inverse()


def check_braid_relations(lam, m, n, variant="plus"):
    """Invertibility, naturality, cubic and distant braid relations at lam."""
    lam = tuple(lam)
    p = len(lam)
    T = lambda i, mu: braiding_matrix(i, mu, m, n, variant)
    report = []
    gens = generators(m, n, ("E", "F", "K"))
    for i in range(1, p):
        M = T(i, lam)
        ok = True
        if M.nrows:
            try:
                ok = M @ M.inverse() == LinearMapQ.identity(M.nrows)
            except ZeroDivisionError:
                ok = False
        report.append(("T%d invertible at %s" % (i, lam), ok))
        if variant == "plus" and ok and M.nrows:
            inv = eval_ladder(braiding_inverse_element(i, swap(lam, i), m, n), m, n)
            report.append(("T%d inverse ladder at %s" % (i, lam), inv == M.inverse()))
        mu = swap(lam, i)
        nat = all(M @ generator_matrix(g, m, n, lam) == generator_matrix(g, m, n, mu) @ M for g in gens)
        report.append(("T%d natural at %s" % (i, lam), nat))
    for i in range(1, p - 1):
        l1 = swap(lam, i)
        l2 = swap(l1, i + 1)
        lhs = T(i, l2) @ T(i + 1, l1) @ T(i, lam)
        r1 = swap(lam, i + 1)
        r2 = swap(r1, i)
        rhs = T(i + 1, r2) @ T(i, r1) @ T(i + 1, lam)
        report.append(("T%d T%d T%d = T%d T%d T%d at %s" % (i, i + 1, i, i + 1, i, i + 1, lam), lhs == rhs))
    for i in range(1, p):
        for j in range(i + 2, p):
            lhs = T(j, swap(lam, i)) @ T(i, lam)
            rhs = T(i, swap(lam, j)) @ T(j, lam)
            report.append(("T%d T%d = T%d T%d at %s" % (i, j, j, i, lam), lhs == rhs))
    return report


# --- braid words and closures ---

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple          # ((index, +1 / -1), ...)
    colors: tuple = None

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i < self.strands or e not in (1, -1):
                raise ValueError("bad braid letter s%d^%d on %d strands" % (i, e, self.strands))
        if self.colors is None:
            object.__setattr__(self, "colors", (1,) * self.strands)
        if len(self.colors) != self.strands:
            raise ValueError("need one color per strand")

    def writhe(self):
        return sum(e for _, e in self.letters)

    def permutation(self):
        perm = list(range(self.strands))
        for i, _ in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return perm

    def __str__(self):
        return " ".join("s%d" % i if e == 1 else "s%d^-1" % i for i, e in self.letters)


def parse_braid(text, strands=None, colors=None):
    """Parse 's1 s2^-1 s1' into a BraidWord."""
    letters = []
    for tok in text.split():
        if not tok.startswith("s"):
            raise ValueError("braid letters look like s<k> or s<k>^-1, got %r" % tok)
        body, _, exp = tok[1:].partition("^")
        e = 1
        if exp:
            if exp not in ("-1", "1", "+1"):
                raise ValueError("only exponents 1 and -1 are allowed, got %r" % tok)
            e = int(exp)
        letters.append((int(body), e))
    if strands is None:
        strands = len(colors) if colors else max([i + 1 for i, _ in letters] + [1])
    return BraidWord(strands, tuple(letters), tuple(colors) if colors else None)


def _closure_layers(b, N):
    """Ladder layers of the braid closure, bottom to top.

    Each strand of color c is born from an (N, 0) pair of uprights by a cup
    F^(c), giving (N - c, c): the left upright carries the dual strand. The
    duals are then slid to the left under all earlier arcs by crossings W, so
    the strands sit on the right half in rainbow position. The braid acts on
    the right half, W is undone with inverse crossings, and caps E^(c) close
    each pair. Returns (start weight, list of LadderElements).
    """
    k = b.strands
    cols = b.colors
    if any(c < 1 or c > N for c in cols):
        raise ValueError("strand colors must lie in 1..N (N = %d)" % N)
    perm = b.permutation()
    if any(cols[perm[t]] != cols[t] for t in range(k)):
        raise ValueError("colors must be constant along each closed component")
    lam = [N, 0] * k
    start = tuple(lam)
    layers = []
    for j in range(k):
        op = RungOp("F", 2 * j + 1, cols[j])
        layers.append(LadderElement.of(LadderWord(tuple(lam), (op,))))
        lam = list(op.shift(lam))
    # slide dual j (at upright 2j+1) to the far left
    swaps = []
    for j in range(1, k):
        for u in range(2 * j, j, -1):
            swaps.append(u)
    for u in swaps:
        layers.append(braiding_element(u, tuple(lam), N, 0).element)
        lam = list(swap(lam, u))
    for i, e in b.letters:
        u = k + i
        if e == 1:
            layers.append(braiding_element(u, tuple(lam), N, 0).element)
        else:
            layers.append(braiding_inverse_element(u, tuple(lam), N, 0))
        lam = list(swap(lam, u))
    for u in reversed(swaps):
        layers.append(braiding_inverse_element(u, tuple(lam), N, 0))
        lam = list(swap(lam, u))
    for j in range(k):
        op = RungOp("E", 2 * j + 1, lam[2 * j + 1])
        layers.append(LadderElement.of(LadderWord(tuple(lam), (op,))))
        lam = list(op.shift(lam))
    if tuple(lam) != start:
        raise ValueError("closure did not return to the start weight")
    return start, layers


def compile_closure(b, N):
    """The closure of a braid as one LadderElement from (N, 0, N, 0, ...) to itself."""
    start, layers = _closure_layers(b, N)
    out = LadderElement.identity(start)
    for x in layers:
        out = out.then(x)
    return out


def _scalar(M):
    if M.shape != (1, 1):
        raise ValueError("closure should evaluate on a one-dimensional space, got %s" % (M.shape,))
    return M[0, 0]


def raw_invariant(b, N):
    """Evaluate the closure layer by layer (same value as evaluating compile_closure)."""
    start, layers = _closure_layers(b, N)
    M = LinearMapQ.identity(len(weight_space(N, 0, start)))
    for x in layers:
        M = eval_ladder(x, N, 0) @ M
    return _scalar(M)


@lru_cache(maxsize=None)
def framing_factor(N, color=1):
    """theta with closure(s1 on two strands of the given color) = theta * unknot."""
    kink = raw_invariant(BraidWord(2, ((1, 1),), (color, color)), N)
    unknot = raw_invariant(BraidWord(1, (), (color,)), N)
    theta = kink / unknot
    if not (theta.is_laurent() and theta.num.is_monomial()):
        raise ArithmeticError("framing factor is not a monomial: %s" % theta)
    return theta


def link_invariant(b, N, normalize=True):
    """sl(N) polynomial of the braid closure; normalized by theta^(-writhe) if requested.

    All strands must carry the same color for the normalization.
    """
    raw = raw_invariant(b, N)
    if not normalize:
        return raw
    cols = set(b.colors)
    if len(cols) != 1:
        raise ValueError("framing normalization needs a single strand color")
    theta = framing_factor(N, cols.pop())
    return raw * theta ** (-b.writhe())


# --- independent oracle: Kauffman bracket state sum ---

def kauffman_jones(b, s=-1):
    """Jones polynomial of the closure normalized so the unknot is q + q^-1.

    State sum of the bracket with loop value -A^2 - A^-2, writhe factor
    (-A^3)^(-w), then A^2 = -q^s.
    """
    k, L = b.strands, len(b.letters)
    out = {}
    for state in range(1 << L):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            parent[find(x)] = find(y)

        for t, (i, e) in enumerate(b.letters):
            for pos in range(k):
                if pos not in (i - 1, i):
                    join((t, pos), (t + 1, pos))
            a_smooth = not (state >> t) & 1
            vertical = a_smooth if e == 1 else not a_smooth
            if vertical:
                join((t, i - 1), (t + 1, i - 1))
                join((t, i), (t + 1, i))
            else:
                join((t, i - 1), (t, i))
                join((t + 1, i - 1), (t + 1, i))
        for pos in range(k):
            join((0, pos), (L, pos))
        loops = len({find((t, pos)) for t in range(L + 1) for pos in range(k)})
        na = sum(1 for t in range(L) if not (state >> t) & 1)
        aexp = na - (L - na)
        # delta^loops with delta = -A^2 - A^-2
        poly = {aexp: 1}
        for _ in range(loops):
            nxt = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            out[e] = out.get(e, 0) + c
    w = b.writhe()
    qpoly = {}
    for e, c in out.items():
        e2 = e - 3 * w
        c = c * (-1) ** (w % 2)
        if e2 % 2:
            raise ArithmeticError("odd power of A in the normalized bracket")
        j = e2 // 2
        qpoly[s * j] = qpoly.get(s * j, 0) + c * (-1) ** (j % 2)
    return RatFuncQ.from_laurent(LaurentPoly.from_dict(qpoly))
