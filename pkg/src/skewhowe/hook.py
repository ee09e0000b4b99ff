"""
The quantum exterior algebra of C^{m|n} (x) C^p with generators z_{ik} = v_i (x) x_k.

Quadratic relations are spanned by the images of Sq2(V) (x) Sq2(W) and
Alt2(V) (x) Alt2(W) under the middle swap, where for V = C^{m|n}

    Sq2(V):  v_i v_i (i even),  v_i v_j + e q v_j v_i       (i < j)
    Alt2(V): v_i v_i (i odd),   q v_i v_j - e v_j v_i       (i < j)

with e = (-1)^{p(i)p(j)}, and W = C^p is purely even. Rewrite rules come
from row-reducing these spans weight by weight with pivots on the largest
2-word, so each rule rewrites a word into strictly smaller ones.

Two generator orders are supported: "vmajor" sorts by (i, k) and "block" by
(k, i). In block order a normal word is a concatenation of wedge monomials,
one per x-index, which is how weight spaces are identified with tensor
products of wedge powers.
"""

from functools import lru_cache

from .qarith import RatFuncQ, LaurentPoly, RZERO, RONE
from .linalg import LinearMapQ

_Q = RatFuncQ.from_laurent(LaurentPoly.monomial(1))


def _vpairs(m, n):
    """(symmetric part, antisymmetric part) of V (x) V as lists of {(a, b): coeff}."""
    N = m + n
    par = lambda i: 0 if i <= m else 1
    sym, alt = [], []
    for i in range(1, N + 1):
        if par(i) == 0:
            sym.append({(i, i): RONE})
        else:
            alt.append({(i, i): RONE})
        for j in range(i + 1, N + 1):
            e = -1 if par(i) and par(j) else 1
            sym.append({(i, j): RONE, (j, i): _Q * e})
            alt.append({(i, j): _Q, (j, i): RatFuncQ.coerce(-e)})
    return sym, alt


class HookAlgebra:
    """Quadratic algebra on z_{ik}; generators are indexed 0..G-1 in the chosen order."""

    def __init__(self, m, n, p, order="vmajor"):
        if order not in ("vmajor", "block"):
            raise ValueError("order must be 'vmajor' or 'block'")
        self.m, self.n, self.p, self.order = m, n, p, order
        pairs = [(i, k) for i in range(1, m + n + 1) for k in range(1, p + 1)]
        if order == "vmajor":
            pairs.sort()
        else:
            pairs.sort(key=lambda ik: (ik[1], ik[0]))
        self.gens = pairs
        self.index = {g: t for t, g in enumerate(pairs)}
        self.odd = [1 if i > m else 0 for i, _ in pairs]
        self.rules = self._build_rules()
        self._nf = {}

    def _build_rules(self):
        vs, va = _vpairs(self.m, self.n)
        ws, wa = _vpairs(self.p, 0)
        rels = []
        for vset, wset in ((vs, ws), (va, wa)):
            for r in vset:
                for s in wset:
                    vec = {}
                    for (a, b), x in r.items():
                        for (c, d), y in s.items():
                            key = (self.index[(a, c)], self.index[(b, d)])
                            vec[key] = vec.get(key, RZERO) + x * y
                    rels.append({k: v for k, v in vec.items() if v})
        # group by weight (multiset of v's, multiset of x's)
        groups = {}
        for vec in rels:
            w = next(iter(vec))
            key = self._weight2(w)
            groups.setdefault(key, []).append(vec)
        rules = {}
        for key, vecs in groups.items():
            words = sorted({w for v in vecs for w in v}, reverse=True)
            col = {w: t for t, w in enumerate(words)}
            rows = [{col[w]: c for w, c in v.items()} for v in vecs]
            # leftmost column = largest word: pivot on the smallest column index
            red, piv = _rref_leftmost(rows, len(words))
            for r, c in zip(red, piv):
                lhs = words[c]
                rules[lhs] = tuple((words[j], -v) for j, v in sorted(r.items()) if j != c)
        return rules

    def _weight2(self, w):
        (a, c), (b, d) = self.gens[w[0]], self.gens[w[1]]
        return (tuple(sorted((a, b))), tuple(sorted((c, d))))

    def normal_form(self, word):
        """Rewrite a word (tuple of generator indices) into {normal word: coeff}."""
        word = tuple(word)
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        for t in range(len(word) - 1):
            rhs = self.rules.get((word[t], word[t + 1]))
            if rhs is None:
                continue
            out = {}
            pre, post = word[:t], word[t + 2:]
            for w2, c in rhs:
                for w, d in self.normal_form(pre + w2 + post).items():
                    v = out.get(w, RZERO) + c * d
                    if v:
                        out[w] = v
                    else:
                        del out[w]
            self._nf[word] = out
            return out
        out = {word: RONE}
        self._nf[word] = out
        return out

    def is_normal(self, word):
        return all((a, b) not in self.rules for a, b in zip(word, word[1:]))

    def basis(self, K):
        """Normal words of length K, sorted."""
        out = []

        def rec(w):
            if len(w) == K:
                out.append(w)
                return
            for g in range(len(self.gens)):
                if w and (w[-1], g) in self.rules:
                    continue
                rec(w + (g,))
        rec(())
        return sorted(out)

    def letters(self, word):
        return [self.gens[g] for g in word]

    def xweight(self, word):
        lam = [0] * self.p
        for g in word:
            lam[self.gens[g][1] - 1] += 1
        return tuple(lam)

    def vweight(self, word):
        mu = [0] * (self.m + self.n)
        for g in word:
            mu[self.gens[g][0] - 1] += 1
        return tuple(mu)

    # --- actions on words ---

    def act_glp(self, kind, j, word):
        """E_j or F_j of U_q(gl(p)) acting through the x-indices."""
        out = {}
        lets = self.letters(word)
        kexp = [(1 if k == j else 0) - (1 if k == j + 1 else 0) for _, k in lets]
        for t, (i, k) in enumerate(lets):
            if kind == "E" and k == j + 1:
                e = sum(kexp[t + 1:])
                new = (i, j)
            elif kind == "F" and k == j:
                e = -sum(kexp[:t])
                new = (i, j + 1)
            else:
                continue
            w = word[:t] + (self.index[new],) + word[t + 1:]
            c = RatFuncQ.from_laurent(LaurentPoly.monomial(e))
            for u, d in self.normal_form(w).items():
                v = out.get(u, RZERO) + c * d
                if v:
                    out[u] = v
                else:
                    del out[u]
        return out

    def act_glmn(self, kind, a, word):
        """E_a, F_a, K_a, L_a (and inverses) of U_q(gl(m|n)) acting through the v-indices."""
        m = self.m
        epsv = lambda i: 1 if i <= m else -1
        lets = self.letters(word)
        if kind in ("K", "Kinv", "L", "Linv"):
            e = 0
            for i, _ in lets:
                if kind[0] == "L":
                    e += epsv(i) if i == a else 0
                else:
                    e += (epsv(i) if i == a else 0) - (epsv(i) if i == a + 1 else 0)
            if kind.endswith("inv"):
                e = -e
            return {word: RatFuncQ.from_laurent(LaurentPoly.monomial(e))}
        odd = a == m
        kexp = [(epsv(i) if i == a else 0) - (epsv(i) if i == a + 1 else 0) for i, _ in lets]
        out = {}
        prefix = 0
        for t, (i, k) in enumerate(lets):
            new = None
            if kind == "E" and i == a + 1:
                new, e = (a, k), sum(kexp[t + 1:])
            elif kind == "F" and i == a:
                new, e = (a + 1, k), -sum(kexp[:t])
            if new is not None:
                sign = -1 if odd and prefix else 1
                w = word[:t] + (self.index[new],) + word[t + 1:]
                c = RatFuncQ.from_laurent(LaurentPoly.monomial(e, sign))
                for u, d in self.normal_form(w).items():
                    v = out.get(u, RZERO) + c * d
                    if v:
                        out[u] = v
                    else:
                        del out[u]
            prefix ^= 1 if i > m else 0
        return out

    def matrix(self, action, src, tgt):
        """Matrix of a word-level action from basis ``src`` to basis ``tgt``."""
        idx = {w: t for t, w in enumerate(tgt)}
        rows = [dict() for _ in tgt]
        for j, w in enumerate(src):
            for u, c in action(w).items():
                rows[idx[u]][j] = c
        return LinearMapQ(len(tgt), len(src), rows, src, tgt)


def _rref_leftmost(rows, ncols):
    """Gauss-Jordan with pivots chosen on the leftmost available column."""
    active = [dict(r) for r in rows if r]
    done, piv = [], []
    for c in range(ncols):
        pr = None
        for t, r in enumerate(active):
            if c in r:
                pr = t
                break
        if pr is None:
            continue
        prow = active.pop(pr)
        inv = RONE / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        for group in (active, done):
            for r in group:
                f = r.get(c)
                if f is None:
                    continue
                for j, v in prow.items():
                    s = r.get(j, RZERO) - f * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        active = [r for r in active if r]
        done.append(prow)
        piv.append(c)
    return done, piv


@lru_cache(maxsize=None)
def hook_algebra(m, n, p, order="vmajor"):
    return HookAlgebra(m, n, p, order)


def block_word(alg, state):
    """Block-order word of a tensor state (tuple of wedge monomials)."""
    return tuple(alg.index[(i, k + 1)] for k, f in enumerate(state) for i in f)


def state_of_block_word(alg, word):
    lam = alg.xweight(word)
    out = [[] for _ in lam]
    for g in word:
        i, k = alg.gens[g]
        out[k - 1].append(i)
    return tuple(tuple(f) for f in out)
