"""
Command line front end: a small parser for ladder expressions and one
subcommand per computation, each producing a RunReport.

    python -m skewhowe eval --m 2 --n 0 "E1 F1 @ [2,0]"
    python -m skewhowe verify-ladders --family 3 --trials 20
    python -m skewhowe commutant --m 1 --n 1 --p 2 --K 3
    python -m skewhowe projector --k 1 --l 1 --M 1 --verify 1 1
    python -m skewhowe invariant --braid "s1 s1 s1" --N 2
    python -m skewhowe klr --lambda 2,0 --beta 1:2 --cutoff 12

Ladder grammar (whitespace between tokens is optional):

    expr   := term (('+' | '-') term)*
    term   := coeff? op* '@' weight
    coeff  := integer | '(' q-expression ')'     e.g. (q^-1 + q) or (-q/(1 + q^2))
    op     := ('E' | 'F') index ('^(' int ')')?
    weight := '[' int (',' int)* ']'

Ops are written in algebraic order, so the rightmost op acts first.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .qarith import RatFuncQ, RONE, parse_q, render
from .ladder import (LadderElement, LadderWord, RungOp, eval_ladder, verify_ladder_relations,
                     commutant_check, commutant_dimension)
from .linalg import LinearMapQ

SCHEMA_VERSION = 1


# --- ladder expressions ---

class LadderSyntaxError(ValueError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__("%s at line %d, column %d" % (msg, line, col))
        self.line, self.column, self.pos = line, col, pos


class _Parser:
    def __init__(self, text, allow_negative):
        self.text = text
        self.i = 0
        self.allow_negative = allow_negative

    def error(self, msg, pos=None):
        raise LadderSyntaxError(msg, self.text, self.i if pos is None else pos)

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error("expected %r, found %r" % (ch, self.peek() or "end of input"))
        self.i += 1

    def integer(self, signed=False):
        self.ws()
        start = self.i
        if signed and self.i < len(self.text) and self.text[self.i] in "+-":
            self.i += 1
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        tok = self.text[start:self.i]
        if not tok.lstrip("+-"):
            self.i = start
            self.error("expected an integer")
        return int(tok)

    def coeff(self):
        ch = self.peek()
        if ch == "(":
            start = self.i
            depth = 0
            while self.i < len(self.text):
                c = self.text[self.i]
                depth += c == "("
                depth -= c == ")"
                self.i += 1
                if depth == 0:
                    break
            if depth:
                self.error("unbalanced parenthesis", start)
            body = self.text[start + 1:self.i - 1]
            try:
                return parse_q(body)
            except (ValueError, IndexError, ZeroDivisionError):
                self.error("cannot read coefficient %r" % body, start)
        if ch.isdigit():
            return RatFuncQ.coerce(self.integer())
        return RONE

    def op(self):
        self.ws()
        kind = self.text[self.i]
        self.i += 1
        idx = self.integer()
        if idx < 1:
            self.error("rung index must be at least 1")
        r = 1
        if self.text.startswith("^(", self.i):
            self.i += 2
            r = self.integer()
            self.expect(")")
            if r < 1:
                self.error("divided power must be at least 1")
        return RungOp(kind, idx, r)

    def weight(self):
        self.expect("[")
        vals = []
        while True:
            pos = self.i
            v = self.integer(signed=True)
            if v < 0 and not self.allow_negative:
                self.error("negative weight entry %d (weights with negative entries are zero)" % v, pos)
            vals.append(v)
            if self.peek() == ",":
                self.i += 1
                continue
            self.expect("]")
            return tuple(vals)

    def term(self):
        c = self.coeff()
        ops = []
        while self.peek() in ("E", "F"):
            ops.append(self.op())
        self.expect("@")
        pos = self.i
        lam = self.weight()
        w = LadderWord(lam, tuple(reversed(ops)))
        for op in ops:
            if op.index >= len(lam):
                self.error("rung %s needs at least %d uprights" % (op, op.index + 1), pos)
        return c, w

    def expr(self):
        terms = []
        sign = RONE
        if self.peek() == "-":
            self.i += 1
            sign = -RONE
        while True:
            c, w = self.term()
            terms.append((sign * c, w))
            ch = self.peek()
            if ch == "+":
                sign = RONE
            elif ch == "-":
                sign = -RONE
            elif ch == "":
                break
            else:
                self.error("unexpected %r" % ch)
            self.i += 1
        src = {w.source for _, w in terms}
        tgt = {w.target for _, w in terms}
        if len(src) > 1 or len(tgt) > 1:
            self.error("terms have different source or target weights", 0)
        out = {}
        for c, w in terms:
            out[w] = out.get(w, RatFuncQ.coerce(0)) + c
        return LadderElement(out, src.pop(), tgt.pop())


def parse_ladder(text, allow_negative=False):
    """Parse a ladder expression into a LadderElement.

    Weights with a negative entry are rejected unless ``allow_negative``.
    """
    return _Parser(text, allow_negative).expr()


def format_ladder(x):
    """Print a LadderElement in the syntax read by parse_ladder."""
    if not x.terms:
        return "0 @ [%s]" % ",".join(map(str, x.source or ()))
    out = []
    for w in sorted(x.terms):
        c = x.terms[w]
        neg = c == -RONE
        if c == RONE or neg:
            body = str(w)
        else:
            body = "(%s) %s" % (render(c), w)
        if not out:
            out.append(("- " if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


# --- reports ---

@dataclass
class RunReport:
    command: str
    args: dict
    checks: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def check(self, name, ok):
        self.checks.append({"name": name, "ok": bool(ok)})

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks)

    def to_dict(self, timing=False):
        d = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "args": self.args,
            "ok": self.ok,
            "checks": self.checks,
            "payload": self.payload,
        }
        if timing:
            d["timing"] = self.timing
        return d

    def to_json(self, timing=False):
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_text(self):
        lines = ["%s: %s" % (self.command, "PASS" if self.ok else "FAIL")]
        for c in self.checks:
            lines.append("  [%s] %s" % ("pass" if c["ok"] else "FAIL", c["name"]))
        for k in sorted(self.payload):
            v = self.payload[k]
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True)
            lines.append("  %s: %s" % (k, v))
        for k in sorted(self.timing):
            lines.append("  time %s: %.3fs" % (k, self.timing[k]))
        return "\n".join(lines)


def _matrix_payload(M):
    return [[render(M[i, j]) for j in range(M.ncols)] for i in range(M.nrows)]


def _scalar_of(M):
    """c if M = c * identity, else None."""
    if M.nrows != M.ncols or M.nrows == 0:
        return None
    c = M[0, 0]
    return c if M == LinearMapQ.identity(M.nrows, scalar=c) else None


def _ints(text):
    return tuple(int(t) for t in text.split(",") if t.strip())


# --- subcommands ---

def cmd_eval(a, rep):
    x = parse_ladder(a.expr, allow_negative=a.allow_negative)
    rep.payload["parsed"] = format_ladder(x)
    M = eval_ladder(x, 1 if a.m is None else a.m, 1 if a.n is None else a.n)
    rep.payload["shape"] = [M.nrows, M.ncols]
    rep.payload["source"] = list(x.source)
    rep.payload["target"] = list(x.target)
    rep.payload["matrix"] = _matrix_payload(M)
    c = _scalar_of(M)
    if c is not None:
        rep.payload["scalar"] = render(c)
    rep.check("parse round-trip", parse_ladder(format_ladder(x), allow_negative=True) == x)


def cmd_verify_ladders(a, rep):
    fams = [a.family] if a.family else list(range(1, 7))
    out = {}
    for f in fams:
        res = verify_ladder_relations(f, a.m, a.n, trials=a.trials, seed=a.seed)
        rep.check("family %d: %d/%d instances (%d nonzero)" % (f, res["passed"], res["trials"], res["nonzero"]),
                  res["passed"] == res["trials"])
        out[str(f)] = {k: res[k] for k in ("trials", "passed", "nonzero")}
        bad = [x for x in res["instances"] if not x["ok"]]
        if bad:
            out[str(f)]["failures"] = [{k: list(v) if isinstance(v, tuple) else v for k, v in x.items()}
                                       for x in bad[:5]]
    rep.payload["families"] = out


def cmd_commutant(a, rep):
    m = 1 if a.m is None else a.m
    n = 1 if a.n is None else a.n
    for K in range(0, a.K + 1):
        res = commutant_check(m, n, a.p, K)
        for name, ok in res:
            if not ok:
                rep.check("K=%d: %s" % (K, name), False)
        rep.check("K=%d: commutation and hook-model transport" % K, all(ok for _, ok in res))
        got, want = commutant_dimension(m, n, a.p, K)
        rep.check("K=%d: commutant dimension %d = %d" % (K, got, want), got == want)
        rep.payload.setdefault("dimensions", {})[str(K)] = {"computed": got, "predicted": want}


def cmd_projector(a, rep):
    from .projector import build_projector, admissible, verify_idempotent_system, fe_eigenvalue
    Ms = [a.M] if a.M is not None else admissible(a.k, a.l)
    proj = {}
    for M in Ms:
        P = build_projector(a.k, a.l, M)
        proj[str(M)] = {
            "coefficients": [render(c) for c in P.coefficients],
            "element": format_ladder(P.element),
            "fe_eigenvalue": render(fe_eigenvalue(a.k, a.l, M)),
        }
        if a.verify:
            m, n = a.verify
            E = P.evaluate(m, n)
            rep.check("e_%d idempotent over C^{%d|%d}" % (M, m, n), E @ E == E)
    if a.verify and a.M is None:
        m, n = a.verify
        for name, ok in verify_idempotent_system(a.k, a.l, m, n):
            rep.check(name, ok)
    rep.payload["projectors"] = proj


def cmd_invariant(a, rep):
    from .braid import parse_braid, link_invariant, kauffman_jones, framing_factor
    colors = _ints(a.colors) if a.colors else None
    b = parse_braid(a.braid, strands=a.strands, colors=colors)
    raw = link_invariant(b, a.N, normalize=False)
    rep.payload["braid"] = str(b)
    rep.payload["colors"] = list(b.colors)
    rep.payload["writhe"] = b.writhe()
    rep.payload["raw"] = render(raw)
    if len(set(b.colors)) == 1:
        theta = framing_factor(a.N, b.colors[0])
        rep.payload["framing_factor"] = render(theta)
        val = link_invariant(b, a.N)
        rep.payload["invariant"] = render(val)
        rep.check("invariant is a Laurent polynomial", val.is_laurent())
        if a.N == 2 and b.colors[0] == 1:
            rep.check("agrees with the Kauffman bracket state sum", val == kauffman_jones(b))


def cmd_klr(a, rep):
    from .klr import cyclotomic_graded_dim, weight_multiplicity, verify_klr_relations, ScalarChoice, DEFAULT
    lam = _ints(a.lam)
    beta = {}
    for part in a.beta.split(","):
        c, _, mult = part.partition(":")
        beta[int(c)] = beta.get(int(c), 0) + int(mult or 1)
    res = cyclotomic_graded_dim(lam, beta, cutoff=a.cutoff)
    rep.payload["graded_dimension"] = [[d, v] for d, v in sorted(res["dims"].items())]
    rep.payload["total"] = res["total"]
    rep.payload["weight_multiplicity"] = weight_multiplicity(lam, beta)
    if res["warning"]:
        rep.payload["warning"] = res["warning"]
    rep.check("graded dimension stabilized below cutoff %d" % a.cutoff, res["stabilized"])
    if a.relations:
        n = sum(beta.values())
        colors = sorted(beta)
        for label, sc in (("t = 1", DEFAULT), ("random t", ScalarChoice.random(colors, seed=a.seed))):
            for name, ok in verify_klr_relations(n, colors, trials=a.trials, scalars=sc, seed=a.seed):
                rep.check("%s: %s" % (label, name), ok)


COMMANDS = {
    "eval": cmd_eval,
    "verify-ladders": cmd_verify_ladders,
    "commutant": cmd_commutant,
    "projector": cmd_projector,
    "invariant": cmd_invariant,
    "klr": cmd_klr,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None, help="even part of C^{m|n}")
    common.add_argument("--n", type=int, default=None, help="odd part of C^{m|n}")
    common.add_argument("--trials", type=int, default=50)
    common.add_argument("--seed", type=int, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings in JSON")
    common.add_argument("--cutoff", type=int, default=12)

    ap = argparse.ArgumentParser(prog="skewhowe", description="Exact skew Howe duality computations over Q(q).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a ladder expression")
    p.add_argument("expr")
    p.add_argument("--allow-negative", action="store_true", help="accept weights with negative entries")

    p = sub.add_parser("verify-ladders", parents=[common], help="random checks of the ladder relations")
    p.add_argument("--family", type=int, choices=range(1, 7), default=None)

    p = sub.add_parser("commutant", parents=[common], help="skew Howe commutation and commutant dimensions")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--K", type=int, default=3)

    p = sub.add_parser("projector", parents=[common], help="two-upright idempotents")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--verify", type=int, nargs=2, metavar=("M_EVEN", "N_ODD"))

    p = sub.add_parser("invariant", parents=[common], help="sl(N) invariant of a braid closure")
    p.add_argument("--braid", required=True, help='e.g. "s1 s2^-1 s1"')
    p.add_argument("--colors", default=None, help="comma separated strand colors")
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--N", type=int, default=2)

    p = sub.add_parser("klr", parents=[common], help="cyclotomic KLR graded dimensions")
    p.add_argument("--lambda", dest="lam", required=True, help="dominant weight, e.g. 2,0")
    p.add_argument("--beta", required=True, help="color:multiplicity list, e.g. 1:2,2:1")
    p.add_argument("--relations", action="store_true", help="also verify the KLR relations on |beta| strands")
    return ap


def run(command, args):
    """Run one subcommand; ``args`` is an argparse namespace (or anything with the same attributes)."""
    if command not in COMMANDS:
        raise ValueError("unknown command %r" % command)
    echo = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(vars(args).items())
            if k not in ("command", "fmt", "timing")}
    rep = RunReport(command, echo)
    t = time.perf_counter()
    COMMANDS[command](args, rep)
    rep.timing["total"] = time.perf_counter() - t
    return rep


def main(argv=None):
    ap = build_parser()
    a = ap.parse_args(argv)
    try:
        rep = run(a.command, a)
    except LadderSyntaxError as e:
        print("syntax error: %s" % e, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    print(rep.to_text() if a.fmt == "text" else rep.to_json(a.timing))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
