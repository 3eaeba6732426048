"""Canonical order-three orthogonal matrices.

The classification of order-three mutually-orthogonal families reduces
every case to a handful of fixed matrices; this module holds them, built
from their closed forms in double precision.

OMEGA1 is the rotation by 2*pi/3 about the first axis. OMEGA2 is the
second (inequivalent) traceless companion of {I, OMEGA1}. G1..G4 are the
signed-permutation-flavoured representatives of the same families; G3P and
G4P are the alternates reachable by conjugation, G5 is the extra
orthogonal matrix sitting in the span of G1..G4, and B is the fixed
change-of-basis relating the two pictures:

    (B.T @ G1) @ {G1, G2, G3P, G3} @ B  ==  {I, OMEGA1, OMEGA1.T, OMEGA2}

R3 is the 2x2 rotation block whose 1 (+) extension conjugates OMEGA1 into
OMEGA2.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "OMEGA1",
    "OMEGA2",
    "G1",
    "G2",
    "G3",
    "G3P",
    "G4",
    "G4P",
    "G5",
    "B",
    "R3",
    "all_constants",
]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)
_SQRT6 = math.sqrt(6.0)

OMEGA1 = np.array(
    [
        [1.0, 0.0, 0.0],
        [0.0, -0.5, -_SQRT3 / 2],
        [0.0, _SQRT3 / 2, -0.5],
    ]
)

OMEGA2 = np.array(
    [
        [-1.0 / 3, _SQRT2 / 3, _SQRT6 / 3],
        [_SQRT2 / 3, 5.0 / 6, -_SQRT3 / 6],
        [-_SQRT6 / 3, _SQRT3 / 6, -0.5],
    ]
)

G1 = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
G2 = np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
G3 = np.array([[0.0, -1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
G3P = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])

G4 = np.array(
    [
        [-0.5, (-1 - _SQRT5) / 4, (1 - _SQRT5) / 4],
        [(-1 + _SQRT5) / 4, -0.5, (1 + _SQRT5) / 4],
        [(1 + _SQRT5) / 4, (1 - _SQRT5) / 4, -0.5],
    ]
)

G4P = np.array(
    [
        [-0.5, (-1 + _SQRT5) / 4, (1 + _SQRT5) / 4],
        [(-1 - _SQRT5) / 4, -0.5, (1 - _SQRT5) / 4],
        [(1 - _SQRT5) / 4, (1 + _SQRT5) / 4, -0.5],
    ]
)

G5 = np.array(
    [
        [0.25, (-5 - _SQRT5) / 8, (5 - _SQRT5) / 8],
        [(-5 + _SQRT5) / 8, 0.25, (5 + _SQRT5) / 8],
        [(5 + _SQRT5) / 8, (5 - _SQRT5) / 8, 0.25],
    ]
)

B = np.array(
    [
        [1 / _SQRT3, -math.sqrt(2.0 / 3.0), 0.0],
        [1 / _SQRT3, 1 / _SQRT6, -1 / _SQRT2],
        [1 / _SQRT3, 1 / _SQRT6, 1 / _SQRT2],
    ]
)

R3 = np.array(
    [
        [1.0 / 3, 2 * _SQRT2 / 3],
        [-2 * _SQRT2 / 3, 1.0 / 3],
    ]
)


def all_constants() -> dict[str, np.ndarray]:
    """Name -> matrix map of every canonical constant (copies)."""
    return {
        "OMEGA1": OMEGA1.copy(),
        "OMEGA2": OMEGA2.copy(),
        "G1": G1.copy(),
        "G2": G2.copy(),
        "G3": G3.copy(),
        "G3P": G3P.copy(),
        "G4": G4.copy(),
        "G4P": G4P.copy(),
        "G5": G5.copy(),
        "B": B.copy(),
    }
