"""Comparison lifts in action: lift curve classes of several G/P's, then
compute G/P quantum products through the lifted G/B constants."""

from qhflag import (QuantumFlagRing, build_root_system, canonical_order,
                    minimal_representatives, pw_lift, qhp_product)

for name, par, lam in [("A2", (1,), {2: 1}), ("A3", (1, 2), {3: 1}),
                       ("B3", (1, 2), {3: 1}), ("B3", (2, 3), {1: 1}),
                       ("G2", (2,), {1: 1})]:
    rs = build_root_system(name[0], int(name[1]))
    lift = pw_lift(rs, par, lam)
    print(f"{name}/P{list(par)}  lambda_P={lam}:")
    print(f"   lambda_B = {list(lift.lambda_B)}, "
          f"Delta_P' = {list(lift.delta_P_prime)}, "
          f"omega factor = s{list(lift.omega_factor.word())}")

print("\nQH*(P^3) from the A3 flag ring: powers of the hyperplane class")
rs = build_root_system("A", 3)
ring = QuantumFlagRing(rs)
par = (1, 2)
reps = minimal_representatives(rs, par)
h = reps[1]
power = {(reps[0], (0,)): 1}


def times_h(cls):
    out = {}
    for (w, exps), c in cls.items():
        for (w2, e2), c2 in qhp_product(ring, par, w, h).items():
            key = (w2, tuple(a + b for a, b in zip(exps, e2)))
            out[key] = out.get(key, 0) + c * c2
    return out


def show(w, e, c):
    parts = [] if c == 1 else [str(c)]
    if e[0]:
        parts.append("q" if e[0] == 1 else f"q^{e[0]}")
    if w.length:
        parts.append(f"s{list(w.word())}")
    return "*".join(parts) if parts else "1"


for k in range(1, 5):
    power = times_h(power)
    desc = " + ".join(show(w, e, c) for (w, e), c in
                      sorted(power.items(), key=lambda t: t[0][0].length))
    print(f"   h^{k} = {desc}")
print("   (h^4 = q * unit: the quantum relation of projective 3-space)")
