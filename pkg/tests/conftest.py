import random

import pytest

from tagcloud import Cloud, TagBox


def make_cloud(rng: random.Random, n: int, target: int = 300, space: int = 4,
               w_range=(10, 150), h_range=(12, 60)) -> Cloud:
    tags = tuple(
        TagBox(f"t{i}", rng.randrange(10),
               rng.randint(*w_range), rng.randint(*h_range))
        for i in range(n)
    )
    return Cloud(tags=tags, target_width=target, space_width=space)


@pytest.fixture
def rng():
    return random.Random(0xC10D)
