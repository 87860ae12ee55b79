"""
Appariement fixe p : Z -> Z x Z.

z : N -> Z est le zigzag z(0) = 0, z(2k - 1) = k, z(2k) = -k, et
c : N x N -> N le couplage de Cantor c(a, b) = (a + b)(a + b + 1)/2 + b.
Alors p(m) = (z(a), z(b)) avec (a, b) = c^-1(z^-1(m)).
"""

from math import isqrt
from typing import Tuple


def zigzag(n: int) -> int:
    """
    Bijection N -> Z.

        >>> [zigzag(n) for n in range(5)]
        [0, 1, -1, 2, -2]
    """
    if n < 0:
        raise ValueError(f"zigzag n'est défini que sur N, reçu {n}")
    if n % 2 == 1:
        return (n + 1) // 2
    return -(n // 2)


def unzigzag(m: int) -> int:
    """
    Inverse de zigzag, Z -> N.

        >>> [unzigzag(m) for m in (0, 1, -1, 2, -2)]
        [0, 1, 2, 3, 4]
    """
    if m > 0:
        return 2 * m - 1
    return -2 * m


def cantor(a: int, b: int) -> int:
    """
    Couplage de Cantor N x N -> N.

        >>> cantor(0, 0), cantor(1, 0), cantor(0, 1)
        (0, 1, 2)
    """
    if a < 0 or b < 0:
        raise ValueError(f"cantor n'est défini que sur N x N, reçu ({a}, {b})")
    w = a + b
    return (w * (w + 1)) // 2 + b


def uncantor(n: int) -> Tuple[int, int]:
    """Inverse exact du couplage de Cantor (racine entière, aucun flottant)."""
    if n < 0:
        raise ValueError(f"uncantor n'est défini que sur N, reçu {n}")
    w = (isqrt(8 * n + 1) - 1) // 2
    b = n - (w * (w + 1)) // 2
    return w - b, b


def pair(m: int) -> Tuple[int, int]:
    """
    p(m) : l'entier m vu comme (indice d'orbite, pas).

        >>> pair(0)
        (0, 0)
    """
    a, b = uncantor(unzigzag(m))
    return zigzag(a), zigzag(b)


def unpair(i: int, k: int) -> int:
    """Inverse de pair."""
    return zigzag(cantor(unzigzag(i), unzigzag(k)))
