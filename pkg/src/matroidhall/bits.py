"""Small helpers for subsets encoded as integer bit masks."""

from itertools import combinations


def bits(mask):
    """Indices of set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def from_indices(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def compress(mask, keep):
    """Re-index ``mask`` onto the positions of ``keep`` (ascending order)."""
    out = 0
    j = 0
    for i in bits(keep):
        if mask >> i & 1:
            out |= 1 << j
        j += 1
    return out


def expand(mask, keep):
    """Inverse of :func:`compress`."""
    out = 0
    for j, i in enumerate(bits(keep)):
        if mask >> j & 1:
            out |= 1 << i
    return out


def submasks(mask):
    """All submasks of ``mask``, in increasing numeric order."""
    idx = bits(mask)
    out = []
    for k in range(1 << len(idx)):
        sub = 0
        for j, i in enumerate(idx):
            if k >> j & 1:
                sub |= 1 << i
        out.append(sub)
    return out


def submasks_of_size(mask, k):
    return [from_indices(c) for c in combinations(bits(mask), k)]


def permute(mask, perm):
    """Image of ``mask`` under the index map ``perm`` (a sequence)."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out
