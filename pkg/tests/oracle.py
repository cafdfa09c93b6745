"""Independent brute-force oracles for small groups.

Nothing here touches the BSGS machinery, the id universe or the kernel:
elements are plain image tuples, closure is repeated multiplication, and
subgroup enumeration grows closed subsets one element at a time.  These
are the reference implementations the fast paths are checked against.
"""

def mul(a, b):
    return tuple(b[x] for x in a)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def closure(degree, gens):
    """All products of the generators (the subgroup they generate)."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def all_subgroups(degree, gens):
    """Every subgroup of <gens>, as a set of frozensets of image tuples.

    BFS over closed subsets: each known subgroup is extended by each
    group element in turn.  Complete because any subgroup is reached by
    adjoining its generators one at a time.  A small generating list is
    carried along so each closure starts from generators, not from the
    whole subgroup.
    """
    G = sorted(closure(degree, gens))
    trivial = frozenset({tuple(range(degree))})
    found = {trivial: []}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            hgens = found[H]
            for g in G:
                if g in H:
                    continue
                K = frozenset(closure(degree, hgens + [g]))
                if K not in found:
                    found[K] = hgens + [g]
                    nxt.append(K)
        frontier = nxt
    return set(found)


def derived_subgroup(degree, elems):
    """Commutator subgroup by brute force over all element pairs."""
    elems = list(elems)
    comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in elems for b in elems}
    return closure(degree, comms)


def ab_value(degree, elems):
    """|H / H'| for an explicit element set."""
    return len(elems) // len(derived_subgroup(degree, elems))


def ab_growth(degree, gens, n_max):
    """ab_n over all subgroups, brute force; returns dict n -> value."""
    subs = all_subgroups(degree, gens)
    order = len(closure(degree, gens))
    data = [(order // len(H), ab_value(degree, H)) for H in subs]
    table = {}
    for n in range(1, n_max + 1):
        table[n] = max(v for idx, v in data if idx <= n)
    return table


def conjugacy_class_count(degree, gens):
    elems = sorted(closure(degree, gens))
    seen = set()
    k = 0
    for x in elems:
        if x in seen:
            continue
        k += 1
        frontier = [x]
        seen.add(x)
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = mul(mul(inv(tuple(g)), y), tuple(g))
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
    return k


def conjugate_set(elems, g):
    gi = inv(tuple(g))
    return frozenset(mul(mul(gi, x), tuple(g)) for x in elems)


def group_subgroups_into_classes(degree, gens, subgroups):
    """Partition explicit subgroups into conjugacy classes."""
    G = sorted(closure(degree, gens))
    remaining = set(subgroups)
    classes = []
    while remaining:
        H = min(remaining, key=lambda s: tuple(sorted(s)))
        orbit = {H}
        frontier = [H]
        while frontier:
            K = frontier.pop()
            for g in gens:
                Kg = conjugate_set(K, g)
                if Kg not in orbit:
                    orbit.add(Kg)
                    frontier.append(Kg)
        classes.append(orbit)
        remaining -= orbit
    return classes
