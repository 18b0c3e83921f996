"""Deterministic primality testing and prime iteration.

Miller-Rabin with the fixed witness set (2, 3, 5, 7, 11, 13, 17, 19, 23,
29, 31, 37) is deterministic for all n < 3.3e24, far beyond the default
witness search limit of 10**6 used by the certificate module.
"""

from collections.abc import Iterator

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int) -> Iterator[int]:
    """Yield primes >= start in increasing order."""
    n = max(2, start)
    if n > 2 and n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 1 if n == 2 else 2
