"""
Link polynomials from braid closures
====================================

Close braids with cups and caps of thickness given by the strand colors
and read off the scalar. At N = 2 this is compared with a state sum.
"""

from skewhowe import parse_braid, link_invariant, kauffman_jones, render
from skewhowe.braid import framing_factor, raw_invariant

braids = {
    "unknot": "s1",
    "Hopf link": "s1 s1",
    "trefoil": "s1 s1 s1",
    "figure eight": "s1 s2^-1 s1 s2^-1",
}

for N in (2, 3):
    print("N = %d, framing factor %s" % (N, render(framing_factor(N))))
    for name, text in braids.items():
        b = parse_braid(text)
        v = link_invariant(b, N)
        line = "  %-13s %s" % (name, render(v))
        if N == 2:
            line += "   (state sum agrees: %s)" % (v == kauffman_jones(b))
        print(line)

# colored strands: color 2 at N = 3 is the dual of color 1
b = parse_braid("s1 s1 s1", colors=(2, 2))
print("trefoil, color 2, N = 3:", render(link_invariant(b, 3)))
print("raw (unnormalized):", render(raw_invariant(b, 3)))
