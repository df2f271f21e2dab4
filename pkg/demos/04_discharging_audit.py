"""Charge redistribution with exact rationals, fully logged and audited.

Vertices and bounded faces start at degree minus four; the outer face
starts at degree plus four; the grand total is exactly zero.  A ruleset
moves charge around in numbered phases and every move is logged, so the
run replays bit-exactly.  The audit then measures the outer-face
accounting and checks the conditional lower bounds where their structural
hypotheses actually hold.
"""

from dpcolor import (RULESET_G1, RULESET_G2, audit, build_from_rotation,
                     initial_charges, run_discharging)

c7 = build_from_rotation(7, [((v - 1) % 7, (v + 1) % 7) for v in range(7)])
led = initial_charges(c7)
print("7-cycle initial charges (outer face holds 7+4):")
print("  " + ", ".join(f"{k}{i}={q}" for (k, i), q in sorted(led.charges.items())))

final, log = run_discharging(c7, RULESET_G1)
print("\ntransfer log (rule, sender, receiver, amount):")
for t in log.entries:
    print("  " + t.line())
print("final charges all zero:", all(q == 0 for q in final.charges.values()))

print("\naudit of an 8-ring with one inner ear (class g2):")
ring = [((v - 1) % 8, (v + 1) % 8) for v in range(8)]
rot = [tuple(r) for r in ring]
rot[0] = (7, 8, 1)
rot[1] = (0, 8, 2)
rot.append((1, 0))
g = build_from_rotation(9, rot, outer_face_hint=list(range(8)))
rep = audit(g, RULESET_G2)
a = rep.accounting
print(f"  boundary edges out: s={a.s}, bare: s'={a.s_prime}, "
      f"3-faces at the rim: f3={a.f3}, rim patches: f3'={a.f3_prime}")
print(f"  surplus returned to the outer face: b = {a.b}")
print(f"  conservation={rep.conservation_ok} replay={rep.replay_ok} "
      f"balance={rep.per_rule_balanced}")
for check in rep.bound_checks:
    state = "n/a" if check.holds is None else ("ok" if check.holds else "VIOLATED")
    print(f"  bound {check.id}: {state}")

print("\nserialized report (element lines, then log lines):")
print("\n".join(rep.to_text().splitlines()[:6] + ["  ..."]))
