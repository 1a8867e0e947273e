"""Pure-Python kernels; reference twin of the compiled ``_kernels`` module."""


def _shape(tau):
    a, b, c = tau
    return a < b, b < c, a < c


def contains_pattern(vals, tau):
    """True iff some i < j < k has (vals[i], vals[j], vals[k]) order-isomorphic to tau."""
    ab, bc, ac = _shape(tau)
    n = len(vals)
    for i in range(n - 2):
        x = vals[i]
        for j in range(i + 1, n - 1):
            y = vals[j]
            if (x < y) != ab:
                continue
            for k in range(j + 1, n):
                z = vals[k]
                if (y < z) == bc and (x < z) == ac:
                    return True
    return False


def ends_with_pattern(vals, tau):
    """True iff an occurrence of tau uses the last entry of vals as its third letter."""
    ab, bc, ac = _shape(tau)
    n = len(vals)
    if n < 3:
        return False
    z = vals[n - 1]
    for j in range(1, n - 1):
        y = vals[j]
        if (y < z) != bc:
            continue
        for i in range(j):
            x = vals[i]
            if (x < y) == ab and (x < z) == ac:
                return True
    return False


def inversions(vals):
    n = len(vals)
    count = 0
    for i in range(n - 1):
        x = vals[i]
        for j in range(i + 1, n):
            if x > vals[j]:
                count += 1
    return count


def inversions_by_residue(vals, mu):
    """Inversion counts split by the residue of the larger entry; slot i-1 holds class i in 1..mu."""
    out = [0] * mu
    n = len(vals)
    for a in range(n - 1):
        x = vals[a]
        slot = (x - 1) % mu
        for b in range(a + 1, n):
            if x > vals[b]:
                out[slot] += 1
    return out


def word_inversions(bits):
    """Pairs i < j with bits[i] == 1 and bits[j] == 0."""
    ones = 0
    count = 0
    for b in bits:
        if b:
            ones += 1
        else:
            count += ones
    return count


def path_area(steps):
    """Column-height sum of an E/N step string."""
    height = 0
    area = 0
    for s in steps:
        if s == "N":
            height += 1
        elif s == "E":
            area += height
        else:
            raise ValueError(f"invalid step {s!r}")
    return area
