"""
Joining the lift back together
==============================

The members of a lift are glued at shared strings.  When the input has a
long enough run of 1s the glue is a ramp 0 1 2 ...; otherwise the join
graph says which members share what.
"""

from pkseq import JoinTrace, Necklace, build_join_graph, is_pkl, lempel_lift, lift_and_join
from pkseq.necklace import ceil_log

a = Necklace("000110111001", 2)
fam = lempel_lift(a)
n = ceil_log(len(a), 2)

graph = build_join_graph(fam, n)
print(graph.to_dot())

trace = JoinTrace()
out = lift_and_join(a, check=True, trace=trace)
print("case", trace.cases, "joins", [(s.left, s.right, s.anchor) for s in trace.steps])
print(out.text(), is_pkl(out).accepted)

# A ternary input whose join graph falls apart into translated copies.
from pkseq import generate_pkl

for length in range(2, 200):
    a = generate_pkl(3, length)
    trace = JoinTrace()
    lift_and_join(a, check=True, trace=trace)
    if trace.cases == ["3b"]:
        break
graph = build_join_graph(lempel_lift(a), ceil_log(length, 3))
print("L =", length, "components:", graph.components())
for s in trace.steps:
    print(f"  {s.left:>8} + {s.right:<10} at {s.anchor}  performed={s.performed}")
