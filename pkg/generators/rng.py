"""
Reproducible random streams.

Every stream comes from numpy's counter-based ``Philox`` bit generator seeded by a ``SeedSequence`` built from the user
seed followed by a derivation path. Path components are integers or strings; strings enter through their CRC-32, so a
path such as ``(seed, 'hom')`` names the same stream on every platform.
"""
import zlib
from typing import Union

import numpy as np

from core.exceptions import InvalidArgument
from .constants import SEED_ERROR


def _path_key(component: Union[int, str]) -> int:
    if isinstance(component, str):
        return zlib.crc32(component.encode('utf-8'))
    return int(component)


def check_seed(seed: int) -> int:
    """
    Raises:
        - InvalidArgument: If ``seed`` is not an unsigned 64-bit integer.
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2 ** 64:
        raise InvalidArgument(SEED_ERROR.format(seed=seed))
    return int(seed)


def derive_rng(seed: int, *path: Union[int, str]) -> np.random.Generator:
    """
    The random generator of ``seed`` along a derivation path.

    Args:
        - seed (int): The user seed, an unsigned 64-bit integer.
        - *path: Integers or strings naming the stream, e.g. ``('h', 3)``.

    Returns:
        - np.random.Generator: A ``Philox`` generator; equal arguments give bit-identical streams.
    """
    entropy = [check_seed(seed), *(_path_key(component) for component in path)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
