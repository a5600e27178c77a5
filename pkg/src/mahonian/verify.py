"""
Bounded exhaustive verification.

Enumerates symmetric groups, word cubes [m]^n and rearrangement classes,
builds joint statistic distributions, and runs a registry of named checks.
Where a check asserts a statistic swap under one of the involutions it is
verified pointwise, element by element, which is strictly stronger than
comparing distributions and localizes any failure.

Each check scans its domain in lexicographic order and reports the instance
count plus the first counterexample, if any.  Domains are partitioned into
lexicographically contiguous chunks, so the report is identical whether the
chunks run serially or on a process pool.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations_with_replacement, permutations as _permutations, product
from typing import Callable, Iterable, Iterator, Sequence

from . import involution, words
from .errors import BoundTooLargeError, InternalInvariantError, UnknownNameError
from .tableaux import foata_j
from .words import Word

# ------------------------------------------------------------------ domains


def symmetric_group(n: int) -> Iterator[Word]:
    """All permutations of 1..n in lexicographic order."""
    return iter(_permutations(range(1, n + 1)))


def word_cube(m: int, n: int) -> Iterator[Word]:
    """All length-n words over the alphabet 1..m in lexicographic order."""
    return iter(product(range(1, m + 1), repeat=n))


def rearrangement_class(letters: Iterable[int]) -> Iterator[Word]:
    """All distinct rearrangements of the given letters, lexicographic.

    >>> list(rearrangement_class((1, 1, 2)))
    [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    """
    current = sorted(letters)
    n = len(current)
    while True:
        yield tuple(current)
        i = n - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1 :] = reversed(current[i + 1 :])


def multinomial(letters: Iterable[int]) -> int:
    """Number of distinct rearrangements of the letters."""
    counts = Counter(letters)
    total = math.factorial(sum(counts.values()))
    for c in counts.values():
        total //= math.factorial(c)
    return total


def multisets(max_letter: int, max_size: int) -> Iterator[Word]:
    """Nondecreasing words over 1..max_letter of every length 1..max_size."""
    for n in range(1, max_size + 1):
        yield from combinations_with_replacement(range(1, max_letter + 1), n)


def _characterizations(letters: Iterable[int]) -> tuple[frozenset[Word], frozenset[Word]]:
    """Compatible permutations computed two independent ways: as the coded
    image of the rearrangement class, and as the permutations whose inverse
    descent set stays inside the multiset's run boundaries."""
    wbar = words.sorted_word(letters)
    coded = frozenset(words.code(v) for v in rearrangement_class(wbar))
    bounds = words.block_boundaries(wbar)
    by_id = frozenset(
        p for p in symmetric_group(len(wbar)) if words.inverse_descent_set(p) <= bounds
    )
    return coded, by_id


def compatible_set(letters: Iterable[int]) -> frozenset[Word]:
    """Permutations compatible with a multiset, cross-checked both ways."""
    if not tuple(letters):
        return frozenset({()})
    coded, by_id = _characterizations(letters)
    if coded != by_id:
        raise InternalInvariantError(
            "coded-image and inverse-descent characterizations disagree"
        )
    return coded


# --------------------------------------------------------------- statistics


def _des(w: Sequence[int]) -> int:
    return len(words.descent_set(w))


def _maj(w: Sequence[int]) -> int:
    return sum(words.descent_set(w))


def _ides(w: Sequence[int]) -> int:
    return len(words.inverse_descent_set(w))


def _imaj(w: Sequence[int]) -> int:
    return sum(words.inverse_descent_set(w))


def _first(w: Sequence[int]) -> int:
    return w[0]


def _d_tuple(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(words.descent_set(w)))


def _id_tuple(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(words.inverse_descent_set(w)))


def _sh_tuple(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(words.shuffle_set(w)))


STATISTICS: dict[str, Callable[[Sequence[int]], object]] = {
    "F": _first,
    "des": _des,
    "ides": _ides,
    "adj": words.adj,
    "maj": _maj,
    "imaj": _imaj,
    "stat": words.stat,
    "D-set": _d_tuple,
    "Id-set": _id_tuple,
    "Sh-set": _sh_tuple,
}


def statistic(name: str) -> Callable[[Sequence[int]], object]:
    """Look up a statistic extractor by name; set values come back sorted."""
    try:
        return STATISTICS[name]
    except KeyError:
        raise UnknownNameError(
            f"unknown statistic {name!r}; known: {', '.join(STATISTICS)}"
        ) from None


def profile(w: Sequence[int], schema: Sequence[str]) -> tuple:
    """The tuple of the named statistics of one word."""
    return tuple(statistic(name)(w) for name in schema)


def joint_distribution(domain: Iterable[Sequence[int]], schema: Sequence[str]) -> Counter:
    """Multiset of statistic tuples over a domain of words."""
    extractors = [statistic(name) for name in schema]
    return Counter(tuple(f(w) for f in extractors) for w in domain)


# ------------------------------------------------------------------ reports


@dataclass(frozen=True)
class Counterexample:
    input: str
    expected: str
    actual: str


@dataclass(frozen=True)
class CheckReport:
    name: str
    domain: str
    instances: int
    passed: bool
    counterexample: Counterexample | None = None

    def lines(self) -> list[str]:
        verdict = "PASS" if self.passed else "FAIL"
        head = f"{verdict} {self.name} ({self.domain}): {self.instances} instances"
        if self.counterexample is None:
            return [head]
        ce = self.counterexample
        return [
            head,
            f"    input:    {ce.input}",
            f"    expected: {ce.expected}",
            f"    actual:   {ce.actual}",
        ]


@dataclass(frozen=True)
class CheckBounds:
    """Size parameters for a check run.

    `n` is the permutation size for symmetric-group checks and the maximum
    word length elsewhere; `alphabet` bounds the letters of word domains;
    `word` restricts class checks to a single rearrangement class; `cap`
    refuses domains with more elements than it; `jobs` > 1 runs the
    partitioned domain on a process pool.
    """

    n: int = 6
    alphabet: int = 3
    word: Word | None = None
    cap: int = 10_000_000
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.n < 1 or self.alphabet < 1 or self.cap < 1 or self.jobs < 1:
            raise ValueError("bounds must be positive")


# --------------------------------------------------------------- predicates

_SWAP_LEFT = ("des", "Id-set", "F", "maj", "stat")
_SWAP_RIGHT = ("des", "Id-set", "F", "stat", "maj")
_ADJ_LEFT = ("adj", "des", "F", "maj", "stat")
_ADJ_RIGHT = ("adj", "des", "F", "stat", "maj")
_SEXT_LEFT = ("imaj", "des", "ides", "F", "maj", "stat")
_SEXT_RIGHT = ("imaj", "des", "ides", "F", "stat", "maj")
_CODE_SCHEMA = ("adj", "des", "Id-set", "maj", "stat")
_CUBE_SCHEMA = ("adj", "des", "ides", "F", "maj", "stat")
_CUBE_SWAPPED = ("adj", "des", "ides", "F", "stat", "maj")

_DISPLAY = {
    "F": "F",
    "des": "des",
    "ides": "ides",
    "adj": "Adj",
    "maj": "MAJ",
    "imaj": "IMAJ",
    "stat": "STAT",
    "D-set": "D",
    "Id-set": "Id",
    "Sh-set": "Sh",
}


def _fmt_value(value: object) -> str:
    if isinstance(value, tuple):
        return "{" + ",".join(str(x) for x in value) + "}"
    return str(value)


def _fmt_profile(schema: Sequence[str], values: Sequence[object]) -> str:
    names = ", ".join(_DISPLAY[s] for s in schema)
    rendered = ", ".join(_fmt_value(v) for v in values)
    return f"({names}) = ({rendered})"


def _swap_failure(
    w: Sequence[int],
    image: Sequence[int],
    left: tuple,
    right: tuple,
    left_schema: Sequence[str],
    right_schema: Sequence[str],
) -> Counterexample:
    return Counterexample(
        input=words.format_word(w),
        expected=_fmt_profile(left_schema, left),
        actual=f"image {words.format_word(image)}: {_fmt_profile(right_schema, right)}",
    )


def _pointwise_swap(w, mapper, left_schema, right_schema):
    image = mapper(w)
    left = profile(w, left_schema)
    right = profile(image, right_schema)
    if left == right:
        return None
    return _swap_failure(w, image, left, right, left_schema, right_schema)


def _pred_adj_swap(p):
    return _pointwise_swap(p, involution.burstein_p, _ADJ_LEFT, _ADJ_RIGHT)


def _pred_id_swap(p):
    return _pointwise_swap(p, involution.phi, _SWAP_LEFT, _SWAP_RIGHT)


def _pred_class_swap(v):
    return _pointwise_swap(v, involution.phi_on_class, _SWAP_LEFT, _SWAP_RIGHT)


def _pred_class_swap_sextuple(v):
    return _pointwise_swap(v, involution.phi_on_class, _SEXT_LEFT, _SEXT_RIGHT)


def _pred_code_preserves(w):
    cw = words.code(w)
    left = profile(w, _CODE_SCHEMA)
    right = profile(cw, _CODE_SCHEMA)
    if left == right:
        return None
    return Counterexample(
        input=words.format_word(w),
        expected=_fmt_profile(_CODE_SCHEMA, left),
        actual=f"coded {words.format_word(cw)}: {_fmt_profile(_CODE_SCHEMA, right)}",
    )


def _pred_switch_sets(p):
    n = len(p)
    image = foata_j(p)
    want_id = tuple(sorted(words.inverse_descent_set(p)))
    want_d = tuple(sorted(n - k for k in words.descent_set(p)))
    got_id = tuple(sorted(words.inverse_descent_set(image)))
    got_d = tuple(sorted(words.descent_set(image)))
    if (want_id, want_d) == (got_id, got_d):
        return None
    return Counterexample(
        input=words.format_word(p),
        expected=f"Id = {_fmt_value(want_id)}, reflected D = {_fmt_value(want_d)}",
        actual=f"image {words.format_word(image)}: Id = {_fmt_value(got_id)}, D = {_fmt_value(got_d)}",
    )


def _pred_maj_stat_sum(p):
    n = len(p)
    lhs = _maj(p) + words.stat(p)
    rhs = (n + 1) * _des(p) - (p[0] - 1)
    if lhs == rhs:
        return None
    return Counterexample(
        input=words.format_word(p),
        expected=f"MAJ + STAT = (n+1)*des - (F-1) = {rhs}",
        actual=f"MAJ + STAT = {lhs}",
    )


def _pred_maj_pair_sum(p):
    n = len(p)
    lhs = _maj(p) + _maj(involution.phi(p))
    rhs = (n + 1) * _des(p) - (p[0] - 1)
    if lhs == rhs:
        return None
    return Counterexample(
        input=words.format_word(p),
        expected=f"MAJ + MAJ(image) = (n+1)*des - (F-1) = {rhs}",
        actual=f"MAJ + MAJ(image) = {lhs}",
    )


_PERM_PREDICATES = {
    "thm-1.1": _pred_adj_swap,
    "thm-1.3": _pred_id_swap,
    "lemma-3.1": _pred_switch_sets,
    "lemma-3.4": _pred_maj_stat_sum,
    "lemma-3.5": _pred_maj_pair_sum,
}
_WORD_PREDICATES = {"eq-2": _pred_code_preserves}
_CLASS_PREDICATES = {"cor-1.4": _pred_class_swap, "cor-1.5": _pred_class_swap_sextuple}

CHECK_IDS: tuple[str, ...] = (
    "thm-1.1",
    "thm-1.2",
    "thm-1.3",
    "cor-1.4",
    "cor-1.5",
    "lemma-3.1",
    "lemma-3.4",
    "lemma-3.5",
    "eq-2",
    "prop-2.4",
)

CHECK_SUMMARIES: dict[str, str] = {
    "thm-1.1": "pointwise (Adj, des, F, MAJ, STAT) swap under burstein_p on S_n",
    "thm-1.2": "sextuple (Adj, des, ides, F, MAJ, STAT) equidistribution on [m]^n",
    "thm-1.3": "pointwise (des, Id, F, MAJ, STAT) swap under phi on S_n",
    "cor-1.4": "pointwise quintuple swap under phi_on_class over rearrangement classes",
    "cor-1.5": "pointwise (IMAJ, des, ides, F, MAJ, STAT) swap under phi_on_class",
    "lemma-3.1": "foata_j preserves Id and reflects D on S_n",
    "lemma-3.4": "MAJ + STAT = (n+1)*des - (F-1) on S_n",
    "lemma-3.5": "MAJ + MAJ(phi image) = (n+1)*des - (F-1) on S_n",
    "eq-2": "coding preserves (Adj, des, Id, MAJ, STAT) on [m]^n",
    "prop-2.4": "both characterizations of compatible permutations coincide",
}


# ------------------------------------------------------------ task running

# Tasks are picklable tuples describing a lexicographically contiguous chunk
# of a domain.  Each returns (chunk size, first failure in the chunk), so a
# merge in task order yields the lexicographically least counterexample and
# an instance count independent of scheduling.


def _run_task(task: tuple) -> tuple[int, Counterexample | None]:
    kind = task[0]
    if kind == "perms":
        _, key, n, first = task
        predicate = _PERM_PREDICATES[key]
        rest = [v for v in range(1, n + 1) if v != first]
        for tail in _permutations(rest):
            failure = predicate((first, *tail))
            if failure is not None:
                return math.factorial(n - 1), failure
        return math.factorial(n - 1), None
    if kind == "cube":
        _, key, m, n, first = task
        predicate = _WORD_PREDICATES[key]
        for tail in product(range(1, m + 1), repeat=n - 1):
            failure = predicate((first, *tail))
            if failure is not None:
                return m ** (n - 1), failure
        return m ** (n - 1), None
    if kind == "class":
        _, key, letters = task
        predicate = _CLASS_PREDICATES[key]
        for v in rearrangement_class(letters):
            failure = predicate(v)
            if failure is not None:
                return multinomial(letters), failure
        return multinomial(letters), None
    if kind == "cube-dist":
        _, m, n = task
        left = joint_distribution(word_cube(m, n), _CUBE_SCHEMA)
        right = joint_distribution(word_cube(m, n), _CUBE_SWAPPED)
        if left == right:
            return m**n, None
        bad = min(t for t in set(left) | set(right) if left[t] != right[t])
        return m**n, Counterexample(
            input=f"[{m}]^{n}",
            expected=f"multiplicity of {bad} in the (.., MAJ, STAT) distribution = {left[bad]}",
            actual=f"multiplicity in the (.., STAT, MAJ) distribution = {right[bad]}",
        )
    if kind == "class-prop":
        (_, letters) = task
        wbar = words.sorted_word(letters)
        coded, by_id = _characterizations(wbar)
        if coded != by_id:
            stray = min(coded.symmetric_difference(by_id))
            side = "coded image" if stray in coded else "inverse-descent side"
            return 1, Counterexample(
                input=words.format_word(wbar),
                expected="identical characterizations of the compatible permutations",
                actual=f"{words.format_word(stray)} appears only in the {side}",
            )
        want = multinomial(wbar)
        if len(coded) != want:
            return 1, Counterexample(
                input=words.format_word(wbar),
                expected=f"{want} compatible permutations (multinomial)",
                actual=str(len(coded)),
            )
        return 1, None
    raise InternalInvariantError(f"unknown task kind {kind!r}")


def _execute(tasks: list[tuple], jobs: int) -> tuple[int, Counterexample | None]:
    if jobs <= 1 or len(tasks) <= 1:
        results = [_run_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    instances = sum(count for count, _ in results)
    failure = next((f for _, f in results if f is not None), None)
    return instances, failure


# ----------------------------------------------------------- check builders


def _class_list(bounds: CheckBounds) -> list[Word]:
    if bounds.word is not None:
        return [words.sorted_word(bounds.word)]
    return list(multisets(bounds.alphabet, bounds.n))


def _class_domain(bounds: CheckBounds) -> str:
    if bounds.word is not None:
        return f"R({words.format_word(words.sorted_word(bounds.word))})"
    return f"classes with n<={bounds.n}, letters<={bounds.alphabet}"


def _build(name: str, bounds: CheckBounds, sizes: Sequence[int]):
    """(domain description, tasks, projected instance count) for one check."""
    if name in _PERM_PREDICATES:
        tasks = [("perms", name, n, first) for n in sizes for first in range(1, n + 1)]
        work = sum(math.factorial(n) for n in sizes)
        domain = f"S_{sizes[0]}" if len(sizes) == 1 else f"S_1..S_{sizes[-1]}"
        return domain, tasks, work
    if name in _WORD_PREDICATES:
        tasks = [
            ("cube", name, m, n, first)
            for n in range(1, bounds.n + 1)
            for m in range(1, bounds.alphabet + 1)
            for first in range(1, m + 1)
        ]
        work = sum(
            m**n for n in range(1, bounds.n + 1) for m in range(1, bounds.alphabet + 1)
        )
        return f"[m]^n, m<={bounds.alphabet}, n<={bounds.n}", tasks, work
    if name == "thm-1.2":
        pairs = [
            (m, n)
            for n in range(1, bounds.n + 1)
            for m in range(1, bounds.alphabet + 1)
        ]
        tasks = [("cube-dist", m, n) for m, n in pairs]
        work = sum(m**n for m, n in pairs)
        return f"[m]^n, m<={bounds.alphabet}, n<={bounds.n}", tasks, work
    if name in _CLASS_PREDICATES:
        classes = _class_list(bounds)
        tasks = [("class", name, cls) for cls in classes]
        work = sum(multinomial(cls) for cls in classes)
        return _class_domain(bounds), tasks, work
    if name == "prop-2.4":
        classes = _class_list(bounds)
        tasks = [("class-prop", cls) for cls in classes]
        work = sum(multinomial(cls) + math.factorial(len(cls)) for cls in classes)
        return _class_domain(bounds), tasks, work
    raise UnknownNameError(f"unknown check {name!r}; known: {', '.join(CHECK_IDS)}")


def _resolve(bounds: CheckBounds | None, overrides: dict) -> CheckBounds:
    resolved = bounds if bounds is not None else CheckBounds()
    return replace(resolved, **overrides) if overrides else resolved


def _run_check(name: str, bounds: CheckBounds, sizes: Sequence[int]) -> CheckReport:
    domain, tasks, work = _build(name, bounds, sizes)
    if work > bounds.cap:
        raise BoundTooLargeError(
            f"{name} over {domain} needs {work} instances, more than the cap {bounds.cap}"
        )
    instances, failure = _execute(tasks, bounds.jobs)
    return CheckReport(
        name=name,
        domain=domain,
        instances=instances,
        passed=failure is None,
        counterexample=failure,
    )


def check(
    name: str,
    bounds: CheckBounds | None = None,
    sweep: bool = False,
    **overrides,
) -> CheckReport:
    """Run one named check.

    Symmetric-group checks run at exactly size `n`, or at every size 1..n
    when `sweep` is set; word and class checks always cover everything
    within (`n`, `alphabet`), or the single class of `word`.  Keyword
    overrides patch the bounds, e.g. ``check("thm-1.3", n=7)``.
    """
    resolved = _resolve(bounds, overrides)
    sizes = list(range(1, resolved.n + 1)) if sweep else [resolved.n]
    return _run_check(name, resolved, sizes)


def run_all(bounds: CheckBounds | None = None, **overrides) -> list[CheckReport]:
    """Run every check; symmetric-group checks sweep sizes 1..n."""
    resolved = _resolve(bounds, overrides)
    return [check(name, resolved, sweep=True) for name in CHECK_IDS]
