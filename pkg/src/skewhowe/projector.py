"""
Two-upright idempotents

    e^{k,l}_M = sum_{t=0}^{M} c_t F^(l-M+t) E^(l-M+t) 1_(k,l)

    c_t = (-1)^t [l-M+t choose t] / [k+l-2M+t choose l-M+t] * [k+l-2M+1] / [k+l-2M+1+t]

projecting onto the isotypic block of highest weight (k+l-M, M).
"""

from dataclasses import dataclass

from .qarith import RatFuncQ, quantum_binomial, quantum_integer, RONE
from .linalg import LinearMapQ
from .ladder import LadderElement, LadderWord, RungOp, eval_ladder, weight_space


def coefficient(k, l, M, t):
    a = l - M + t
    num = RatFuncQ.from_laurent(quantum_binomial(a, t) * quantum_integer(k + l - 2 * M + 1))
    den = RatFuncQ.from_laurent(quantum_binomial(k + l - 2 * M + t, a)
                                * quantum_integer(k + l - 2 * M + 1 + t))
    c = num / den
    return -c if t % 2 else c


def fe_word(k, l, x):
    """F^(x) E^(x) 1_(k,l) as a LadderWord (identity word when x = 0)."""
    if x == 0:
        return LadderWord((k, l))
    return LadderWord((k, l), (RungOp("E", 1, x), RungOp("F", 1, x)))


@dataclass
class ProjectorElement:
    k: int
    l: int
    M: int
    coefficients: tuple
    element: LadderElement

    def evaluate(self, m, n):
        return eval_ladder(self.element, m, n)


def build_projector(k, l, M):
    if not (0 <= M <= l and k + l - 2 * M >= 0 and k >= 0):
        raise ValueError("projector parameters out of range: k=%d l=%d M=%d" % (k, l, M))
    cs = tuple(coefficient(k, l, M, t) for t in range(M + 1))
    terms = {fe_word(k, l, l - M + t): c for t, c in enumerate(cs)}
    el = LadderElement(terms, (k, l), (k, l))
    return ProjectorElement(k, l, M, cs, el)


def admissible(k, l):
    return list(range(0, min(k, l) + 1))


def verify_idempotent_system(k, l, m, n):
    """Idempotency and pairwise orthogonality of all e^{k,l}_M on the (k, l) weight space."""
    Ms = admissible(k, l)
    ev = {M: build_projector(k, l, M).evaluate(m, n) for M in Ms}
    dim = len(weight_space(m, n, (k, l)))
    Z = LinearMapQ.zeros(dim, dim)
    report = []
    for M in Ms:
        report.append(("e_%d idempotent" % M, ev[M] @ ev[M] == ev[M]))
        for M2 in Ms:
            if M2 > M:
                report.append(("e_%d e_%d = 0" % (M, M2), ev[M] @ ev[M2] == Z and ev[M2] @ ev[M] == Z))
    total = Z
    for M in Ms:
        total = total + ev[M]
    report.append(("sum of all e_M = 1", total == LinearMapQ.identity(dim)))
    return report


def projector_sum(k, l, m, n, Ms):
    dim = len(weight_space(m, n, (k, l)))
    total = LinearMapQ.zeros(dim, dim)
    for M in Ms:
        if M in admissible(k, l):
            total = total + build_projector(k, l, M).evaluate(m, n)
    return total


def verify_gl_m1_completeness(k, l, m):
    """Sum of e_M over 0 <= M <= m is the identity over C^{m|1}.

    The report also records whether the sum starting at M = 1 is the identity.
    """
    dim = len(weight_space(m, 1, (k, l)))
    I = LinearMapQ.identity(dim)
    return [
        ("sum_{M=0}^{%d} e_M = 1" % m, projector_sum(k, l, m, 1, range(0, m + 1)) == I),
        ("sum_{M=1}^{%d} e_M = 1" % m, projector_sum(k, l, m, 1, range(1, m + 1)) == I),
    ]


def gl11_two_term(k, l):
    """1_(k,l) expressed through two ladders, valid on C^{1|1}:

    1/[k+l-2 choose l-1] F^(l-1)E^(l-1) - [l-1]/[k+l-1 choose k-1] F^(l)E^(l).
    """
    if k < 1 or l < 1:
        raise ValueError("need k, l >= 1")
    c1 = RONE / RatFuncQ.from_laurent(quantum_binomial(k + l - 2, l - 1))
    c2 = RatFuncQ.from_laurent(quantum_integer(l - 1)) / RatFuncQ.from_laurent(quantum_binomial(k + l - 1, k - 1))
    return LadderElement({fe_word(k, l, l - 1): c1, fe_word(k, l, l): -c2}, (k, l), (k, l))


def verify_gl11_two_term_relation(k, l):
    el = gl11_two_term(k, l)
    dim = len(weight_space(1, 1, (k, l)))
    return [("two-term identity at (%d,%d)" % (k, l), eval_ladder(el, 1, 1) == LinearMapQ.identity(dim))]


def fe_eigenvalue(k, l, M):
    """Scalar by which F E acts on the (k, l) weight space of the block (k+l-M, M)."""
    return RatFuncQ.from_laurent(quantum_integer(l - M) * quantum_integer(k - M + 1))


def isotypic_dimension(k, l, M, m, n):
    """Eigenspace dimension of F E 1_(k,l) for the eigenvalue of the block (k+l-M, M)."""
    from .ladder import word
    FE = eval_ladder(word((k, l), "F1", "E1"), m, n)
    dim = FE.nrows
    A = FE - LinearMapQ.identity(dim, scalar=fe_eigenvalue(k, l, M))
    return dim - A.rank()
