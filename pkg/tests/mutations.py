"""Single-value mutations of certificate documents (shared by the verifier tests)."""

import copy
import random
from fractions import Fraction

from pompeiu.exactfield import format_complex, format_real, parse_complex, parse_field, parse_real

KINDS = ("multiplier", "rotation", "image_id")


def _delta(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))


def mutate(doc: dict, rng: random.Random, kind: str | None = None) -> tuple[dict, str]:
    doc = copy.deepcopy(doc)
    f = parse_field(doc["problem"]["field"])
    kind = kind or rng.choice(KINDS)
    if kind == "multiplier":
        m = rng.choice(doc["multipliers"])
        m["lambda"] = format_complex(parse_complex(m["lambda"], f) + _delta(rng))
        where = f"multiplier of placement {m['placement']}"
    elif kind == "rotation":
        pl = rng.choice(doc["placements"])
        i = rng.randrange(len(pl["rotation"]))
        j = rng.randrange(len(pl["rotation"]))
        old = parse_real(pl["rotation"][i][j], f)
        pl["rotation"][i][j] = format_real(old + _delta(rng))
        where = f"rotation[{i}][{j}] of placement {pl['label']}"
    else:
        pl = rng.choice(doc["placements"])
        j = rng.randrange(len(pl["image_ids"]))
        ids = [w["id"] for w in doc["witness_points"]]
        choices = [i for i in ids if i != pl["image_ids"][j]] + [max(ids) + 1]
        pl["image_ids"][j] = rng.choice(choices)
        where = f"image id {j} of placement {pl['label']}"
    return doc, f"{kind}: {where}"
