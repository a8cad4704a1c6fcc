import random

from toric_jets import LineBundle, del_pezzo_6, hirzebruch, projective_space
from toric_jets.fan import random_blow_up

SEED = 1729


def corpus():
    """Named fans used throughout: P^1..P^3, F_0..F_3, dP6 and two random blow-ups."""
    fans = {f"P{n}": projective_space(n) for n in (1, 2, 3)}
    fans.update({f"F{r}": hirzebruch(r) for r in range(4)})
    fans["dP6"] = del_pezzo_6()
    fans["BlP3"] = random_blow_up(projective_space(3), 2, seed=SEED)
    fans["BlF2"] = random_blow_up(hirzebruch(2), 2, seed=SEED + 1)
    return fans


def random_bundles(fan, count, seed, lo=-3, hi=3):
    rng = random.Random(seed)
    return [LineBundle(fan, [rng.randint(lo, hi) for _ in range(fan.n_rays)]) for _ in range(count)]


def cofactor_det(rows):
    rows = [list(r) for r in rows]
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * x * cofactor_det(minor)
    return total
