from amoeba_types.types import Partition


def meet(P: Partition, Q: Partition) -> Partition:
    """P ∧ Q: the nonempty pairwise intersections, a partition of support(P) ∩ support(Q)"""
    parts = []
    for p in P.parts:
        for q in Q.parts:
            if p & q:
                parts.append(p & q)
    return Partition.from_parts(parts)
