def primes_upto(limit: int) -> list[int]:
    """Simple sieve; the tests' own source of primes, independent of the library."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def odd_primes_upto(limit: int) -> list[int]:
    return [p for p in primes_upto(limit) if p > 2]
