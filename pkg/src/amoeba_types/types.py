from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Any

from sympy.polys.domains import QQ, QQ_I

# A subset of the ground set [n] as a bit mask: bit i set <=> element i in S.
# The ground size travels with the oracle, not with the mask.
SubsetMask = int

MAX_GROUND_SIZE = 64


@dataclass(frozen=True)
class GaussianRational:
    """
    Exact complex number a+bi with rational parts (an element of Q(i)).

    Parsed input and reported values use this type; arithmetic and linear
    algebra run on sympy's QQ_I after to_domain().
    """
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction keeps parts reduced with positive denominators
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def from_domain(cls, value) -> "GaussianRational":
        """Back from a QQ_I element"""
        re, im = QQ.to_sympy(value.x), QQ.to_sympy(value.y)
        return cls(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))

    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_domain(self):
        return QQ_I(QQ(self.re_num, self.re_den), QQ(self.im_num, self.im_den))


@dataclass(frozen=True)
class GRMatrix:
    """d x n matrix over Q(i) whose row space presents V"""
    entries: Tuple[Tuple[GaussianRational, ...], ...]

    @classmethod
    def from_rows(cls, rows: List[List[Any]]) -> "GRMatrix":
        """Build from nested lists of GaussianRational / int / Fraction entries"""
        converted = tuple(
            tuple(x if isinstance(x, GaussianRational) else GaussianRational(Fraction(x)) for x in row)
            for row in rows
        )
        return cls(entries=converted)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> Tuple[GaussianRational, ...]:
        return tuple(row[j] for row in self.entries)


def _lowest_bit(mask: SubsetMask) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Partition:
    """Pairwise disjoint nonempty parts whose union is the support, in canonical order"""
    parts: Tuple[SubsetMask, ...] = ()
    support: SubsetMask = 0

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Canonicalize (ascending by lowest element); rejects empty or overlapping parts"""
        support = 0
        for part in parts:
            if part == 0:
                raise ValueError("partition parts must be nonempty")
            if support & part:
                raise ValueError("partition parts must be pairwise disjoint")
            support |= part
        ordered = tuple(sorted(parts, key=_lowest_bit))
        return cls(parts=ordered, support=support)

    @classmethod
    def singletons(cls, support: SubsetMask) -> "Partition":
        parts = []
        rest = support
        while rest:
            low = rest & -rest
            parts.append(low)
            rest ^= low
        return cls.from_parts(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def to_lists(self) -> List[List[int]]:
        """1-based element lists, the human-facing serialization"""
        result = []
        for part in self.parts:
            result.append([i + 1 for i in range(part.bit_length()) if part >> i & 1])
        return result


@dataclass(frozen=True)
class SubsetMultiset:
    """Finite multiset of subsets of E, stored as (mask, multiplicity) in sorted order"""
    items: Tuple[Tuple[SubsetMask, int], ...] = ()

    @classmethod
    def from_members(cls, members) -> "SubsetMultiset":
        counts: Dict[SubsetMask, int] = {}
        for member in members:
            counts[member] = counts.get(member, 0) + 1
        return cls(items=tuple(sorted(counts.items())))

    def members(self) -> List[SubsetMask]:
        """Expanded member list (with repetition) in canonical order"""
        expanded = []
        for mask, multiplicity in self.items:
            expanded.extend([mask] * multiplicity)
        return expanded

    def count(self) -> int:
        """#S, counting multiplicities"""
        return sum(multiplicity for _, multiplicity in self.items)

    def coverage(self, element: int) -> int:
        """c(S)_e: number of members containing the element"""
        return sum(m for mask, m in self.items if mask >> element & 1)

    def n_value(self) -> int:
        """n(S) = sum of |S|^2 over members"""
        return sum(m * mask.bit_count() ** 2 for mask, m in self.items)

    def union(self) -> SubsetMask:
        result = 0
        for mask, _ in self.items:
            result |= mask
        return result


@dataclass(frozen=True)
class ScaledCunninghamFn:
    """F(I) = 2k*(2r(I+e) - 2 - |I|) - |I| on subsets I of B, i.e. 2k times the Cunningham-style f"""
    oracle: Any           # RankOracle
    e: int                # the element being added (e not in B)
    B: SubsetMask         # current M'-basis
    k: int                # |B|


@dataclass(frozen=True)
class OptimalPartitionResult:
    """Output of the coarsest-optimal-partition algorithm for one S"""
    partition: Partition
    basis: SubsetMask
    rprime: int
    rank_calls: int


@dataclass
class JacobianSample:
    """One sampled point p of X and the real rank of d_p Log found there"""
    coefficients: List[GaussianRational]
    point: List[GaussianRational]
    rank_found: int


@dataclass
class SuiteReport:
    """Report of a verification suite: {checks_run, failures, bell_counts}"""
    suite: str
    checks_run: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    bell_counts: Dict[str, int] = field(default_factory=dict)
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, axiom: str, S: SubsetMask, T: Optional[SubsetMask], values: List[int]):
        self.failures.append({"axiom": axiom, "S": S, "T": T, "values": values})

    def to_dict(self) -> dict:
        result = {
            "checks_run": self.checks_run,
            "failures": [
                {
                    "axiom": f["axiom"],
                    "S": _mask_to_list(f["S"]),
                    "T": None if f["T"] is None else _mask_to_list(f["T"]),
                    "values": f["values"],
                }
                for f in self.failures
            ],
            "bell_counts": self.bell_counts,
        }
        result.update(self.extra)
        return result


def _mask_to_list(mask: SubsetMask) -> List[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class InstanceSpec:
    """Where an instance comes from: a matrix file or a builtin generator"""
    matrix_path: Optional[str] = None
    matrix_format: str = "text"              # text | json
    generator: Optional[str] = None          # uniform | nisse | trunc-sum | identity | ones | random
    params: Tuple[int, ...] = ()
    seed: int = 0


@dataclass
class Instance:
    """A resolved instance: a loopless rank oracle and, when representable here, its matrix"""
    label: str
    oracle: Any                              # RankOracle
    matrix: Optional[GRMatrix] = None


@dataclass
class ResultDocument:
    """JSON result of dim / rank / verify; field order is stable"""
    value_key: str                           # "dim" or "rprime"
    value: int
    partition: List[List[int]]
    basis: List[int]
    rank_calls: int
    subset: Optional[List[int]] = None
    verifications: Optional[Dict[str, Any]] = None

    def to_dict(self) -> dict:
        result: Dict[str, Any] = {self.value_key: self.value}
        if self.subset is not None:
            result["subset"] = self.subset
        result["partition"] = self.partition
        result["basis"] = self.basis
        result["rank_calls"] = self.rank_calls
        if self.verifications is not None:
            result["verifications"] = self.verifications
        return result


@dataclass
class AmoebaConfig:
    """Tunables shared by the library and the CLI"""
    threads: int = 1                    # worker cap, AMOEBA_THREADS
    brute_force_max_k: int = 22         # minimize_brute refuses larger B
    sfm_dispatch_k: int = 22            # largest_feasible_J switches to min-norm point above this
    coefficient_bound: int = 10 ** 6    # generic sampling range [-B, B]
    max_sample_retries: int = 100
    samples: int = 5
    seed: int = 0
    brute_partition_max: int = 12       # Bell(12) ~ 4.2M
    axiom_max: int = 8
    c_connected_max: int = 24
    max_cache_entries: int = 2 ** 20

    def __post_init__(self):
        if self.threads < 1:
            self.threads = 1
