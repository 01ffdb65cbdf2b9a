"""Exhaustive checks of the structural results up to a size bound.

Every check returns a VerificationReport. Failures are collected, never raised, so one
run reports every counterexample it finds. Work is split into chunks and dispatched
through ``run_chunks``; chunk results merge in chunk order so reports are reproducible
for any ``jobs``.
"""
import logging
import random
import time
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config import get_config
from catpoly.exceptions import CatpolyError, HypothesisError
from catpoly.models.reports import VerificationReport
from catpoly.models.tree import Tree
from catpoly.services.caterpillars import (
    caterpillar_compositions,
    caterpillar_from_sequence,
    caterpillar_view,
    phi,
    proper_caterpillar_compositions,
    psi,
    u_restricted,
)
from catpoly.services.compositions import (
    Composition,
    enumerate_compositions,
    format_composition,
    is_palindrome,
    l_polynomial,
    reverse_class_rep,
)
from catpoly.services.executor import chunked, run_chunks
from catpoly.services.factorization import (
    all_irreducible_factorizations_bruteforce,
    irreducible_factorization,
    sym_class,
)
from catpoly.services.lclass import is_l_unique, l_class_chunk, merge_class_maps
from catpoly.services.trees import (
    canonical_code,
    enumerate_free_trees,
    format_tree,
    random_tree,
    u_polynomial_bruteforce,
    u_polynomial_tree,
)
from catpoly.services.witness import sample_triples, split_for_witness, witness_theorem
from catpoly.utils.caps import enforce_cap

logger = logging.getLogger(__name__)

# Unlabeled trees on n vertices (OEIS A000055)
FREE_TREE_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106,
    11: 235, 12: 551, 13: 1301, 14: 3159, 15: 7741, 16: 19320,
}


def _fmt(beta: Sequence[int]) -> str:
    return format_composition(beta)


def _settings():
    cfg = get_config()
    return cfg.CHUNK_SIZE, cfg.SHOW_PROGRESS


def _composition_cost(n: int) -> str:
    return f"3^{n - 1} coarsenings"


def _lclass_index(n: int, min_part: int, jobs: int) -> Dict[str, List[Composition]]:
    _, progress = _settings()
    chunks = [(n, first, min_part) for first in range(min_part, n + 1)]
    maps = run_chunks(_lclass_worker, chunks, jobs=jobs, progress=progress, desc='L-classes')
    return merge_class_maps(maps)


def _lclass_worker(args: Tuple[int, int, int]):
    n, first, min_part = args
    return l_class_chunk(n, first, min_part)


# ---------------------------------------------------------------------------
# Composition checks
# ---------------------------------------------------------------------------

def _sym_worker(classes: List[Tuple[Composition, ...]]) -> Tuple[int, List[str]]:
    checked = 0
    failures = []
    for members in classes:
        expected = frozenset(members)
        for beta in members:
            checked += 1
            sym = sym_class(beta)
            if sym != expected:
                failures.append(
                    f"{_fmt(beta)}: sym class {sorted(map(_fmt, sym))} != L-class {sorted(map(_fmt, expected))}"
                )
    return checked, failures


def check_sym_equals_lclass(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Every composition's symmetry class equals its brute-force L-class."""
    enforce_cap('MAX_COMPOSITION_N', n, _composition_cost(n), force=force)
    chunk_size, progress = _settings()
    index = _lclass_index(n, 1, jobs)
    classes = [tuple(sorted(members)) for _, members in sorted(index.items())]
    results = run_chunks(_sym_worker, list(chunked(classes, chunk_size)), jobs=jobs, progress=progress, desc='sym classes')
    report = VerificationReport(check_name='sym-lclass', parameter_n=n)
    for checked, failures in results:
        report.instances_checked += checked
        report.failures.extend(failures)
    report.details['l_classes'] = len(classes)
    return report


def check_palindromes_unique(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Palindromic compositions are L-unique."""
    enforce_cap('MAX_COMPOSITION_N', n, _composition_cost(n), force=force)
    index = _lclass_index(n, 1, jobs)
    report = VerificationReport(check_name='palindromes', parameter_n=n)
    for members in index.values():
        for beta in members:
            if not is_palindrome(beta):
                continue
            report.instances_checked += 1
            others = [m for m in members if m != beta]
            if others:
                report.failures.append(f"palindrome {_fmt(beta)} shares L with {', '.join(map(_fmt, sorted(others)))}")
    return report


def _factorization_worker(args: Tuple[int, int]) -> Tuple[int, List[str]]:
    n, first = args
    checked = 0
    failures = []
    for beta in enumerate_compositions(n, start=(first,)):
        checked += 1
        try:
            factors = irreducible_factorization(beta).factors
        except RuntimeError as e:
            failures.append(str(e))
            continue
        found = all_irreducible_factorizations_bruteforce(beta, max_size=n)
        if found != {factors}:
            failures.append(
                f"{_fmt(beta)}: parse gives {[_fmt(f) for f in factors]}, "
                f"exhaustive search gives {sorted([_fmt(f) for f in fs] for fs in found)}"
            )
    return checked, failures


def check_unique_factorization(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Each composition has exactly one irreducible factorization, and the parser finds it."""
    enforce_cap('MAX_COMPOSITION_N', n, f"circ product table up to size {n}", force=force)
    _, progress = _settings()
    chunks = [(n, first) for first in range(1, n + 1)]
    results = run_chunks(_factorization_worker, chunks, jobs=jobs, progress=progress, desc='factorizations')
    report = VerificationReport(check_name='unique-factorization', parameter_n=n)
    for checked, failures in results:
        report.instances_checked += checked
        report.failures.extend(failures)
    return report


def check_known_unique_families(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Compositions with fewer than five parts, palindromes, and distinct-part compositions are L-unique."""
    enforce_cap('MAX_COMPOSITION_N', n, _composition_cost(n), force=force)
    index = _lclass_index(n, 1, jobs)
    report = VerificationReport(check_name='known-unique', parameter_n=n)
    for members in index.values():
        reps = {reverse_class_rep(m) for m in members}
        for beta in members:
            if len(beta) < 5 or is_palindrome(beta) or len(set(beta)) == len(beta):
                report.instances_checked += 1
                if len(reps) > 1:
                    report.failures.append(f"{_fmt(beta)} is not L-unique: class {sorted(map(_fmt, members))}")
    return report


# ---------------------------------------------------------------------------
# Caterpillar checks
# ---------------------------------------------------------------------------

def _ul_worker(betas: List[Composition]) -> List[str]:
    failures = []
    for beta in betas:
        tree = psi(beta)
        rep = phi(tree)
        if u_restricted(tree) != l_polynomial(rep):
            failures.append(f"U^L(Psi({_fmt(beta)})) != L({_fmt(rep)})")
    return failures


def check_ul_equals_l(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """U^L of a proper caterpillar equals the L-polynomial of its spine composition."""
    enforce_cap('MAX_CATERPILLAR_N', n, f"2^{n} spine subsets per caterpillar", force=force)
    chunk_size, progress = _settings()
    betas = proper_caterpillar_compositions(n)
    results = run_chunks(_ul_worker, list(chunked(betas, chunk_size)), jobs=jobs, progress=progress, desc='U^L')
    report = VerificationReport(check_name='ul-equals-l', parameter_n=n, instances_checked=len(betas))
    for failures in results:
        report.failures.extend(failures)
    return report


def _x1_worker(betas: List[Composition]) -> List[str]:
    failures = []
    for beta in betas:
        tree = caterpillar_from_sequence(beta)
        full = u_polynomial_tree(tree)
        restricted = u_restricted(tree)
        if full.drop_part_one() != restricted.drop_part_one():
            failures.append(f"{_fmt(beta)}: U and U^L disagree on terms without a part 1")
        view = caterpillar_view(tree)
        if view.proper and restricted.has_part(1):
            failures.append(f"{_fmt(beta)}: proper caterpillar has a part 1 in U^L")
    return failures


def check_x1_proposition(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """U and U^L agree on every term without a part equal to 1."""
    enforce_cap('MAX_CATERPILLAR_N', n, f"2^{n} spine subsets per caterpillar", force=force)
    chunk_size, progress = _settings()
    betas = caterpillar_compositions(n)
    results = run_chunks(_x1_worker, list(chunked(betas, chunk_size)), jobs=jobs, progress=progress, desc='x1')
    report = VerificationReport(check_name='x1', parameter_n=n, instances_checked=len(betas))
    for failures in results:
        report.failures.extend(failures)
    return report


def _u_key_worker(betas: List[Composition]) -> List[Tuple[Composition, str]]:
    return [(beta, u_polynomial_tree(psi(beta)).canonical_key()) for beta in betas]


def check_main_result(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Non-isomorphic proper caterpillars on n vertices have different U-polynomials."""
    enforce_cap('MAX_CATERPILLAR_N', n, "one tree DP per caterpillar class", force=force)
    chunk_size, progress = _settings()
    betas = proper_caterpillar_compositions(n)
    results = run_chunks(_u_key_worker, list(chunked(betas, chunk_size)), jobs=jobs, progress=progress, desc='U keys')
    groups: Dict[str, List[Composition]] = defaultdict(list)
    for chunk in results:
        for beta, key in chunk:
            groups[key].append(beta)
    report = VerificationReport(check_name='main-result', parameter_n=n, instances_checked=len(betas))
    for key, members in sorted(groups.items()):
        if len(members) < 2:
            continue
        # keys are canonical, confirm with a full comparison before reporting
        first = u_polynomial_tree(psi(members[0]))
        same = [m for m in members[1:] if u_polynomial_tree(psi(m)) == first]
        if same:
            report.failures.append(f"U-collision: {', '.join(_fmt(m) for m in [members[0]] + same)}")
    report.details['classes'] = len(betas)
    return report


def _u_determines_l_worker(betas: List[Composition]) -> List[str]:
    failures = []
    for beta in betas:
        if u_polynomial_tree(psi(beta)).drop_part_one() != l_polynomial(beta):
            failures.append(f"{_fmt(beta)}: U without part-1 terms differs from L")
    return failures


def check_u_determines_l(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """For proper caterpillars, dropping every term with a part 1 from U leaves exactly L."""
    enforce_cap('MAX_CATERPILLAR_N', n, "one tree DP per caterpillar class", force=force)
    chunk_size, progress = _settings()
    betas = proper_caterpillar_compositions(n)
    results = run_chunks(_u_determines_l_worker, list(chunked(betas, chunk_size)), jobs=jobs,
                         progress=progress, desc='U -> L')
    report = VerificationReport(check_name='u-determines-l', parameter_n=n, instances_checked=len(betas))
    for failures in results:
        report.failures.extend(failures)
    return report


def _proof_chain_worker(pairs: List[Tuple[Composition, Composition]]) -> List[str]:
    failures = []
    for alpha, beta in pairs:
        try:
            a, b, gamma = split_for_witness(alpha, beta)
            witness_theorem(a, b, gamma, normalize=True)
        except CatpolyError as e:
            failures.append(f"{_fmt(alpha)} vs {_fmt(beta)}: {e}")
    return failures


def check_proof_chain(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Every L-equal pair of proper, non-reverse-equivalent compositions gets a witness partition."""
    enforce_cap('MAX_COMPOSITION_N', n, _composition_cost(n), force=force)
    chunk_size, progress = _settings()
    index = _lclass_index(n, 2, jobs)
    pairs = []
    for _, members in sorted(index.items()):
        reps = sorted({reverse_class_rep(m) for m in members if len(m) >= 2})
        pairs.extend((reps[i], reps[j]) for i in range(len(reps)) for j in range(i + 1, len(reps)))
    results = run_chunks(_proof_chain_worker, list(chunked(pairs, chunk_size)), jobs=jobs,
                         progress=progress, desc='witnesses')
    report = VerificationReport(check_name='proof-chain', parameter_n=n, instances_checked=len(pairs))
    for failures in results:
        report.failures.extend(failures)
    return report


def check_witness_samples(n: int, jobs: int = 1, force: bool = False, samples: Optional[int] = None,
                          seed: Optional[int] = None, **_) -> VerificationReport:
    """Random valid triples with |alpha| * |gamma| <= n all produce a working witness."""
    cfg = get_config()
    seed = cfg.DEFAULT_SEED if seed is None else seed
    samples = 200 if samples is None else samples
    triples = sample_triples(samples, max_size=n, seed=seed)
    report = VerificationReport(check_name='witness', parameter_n=n, seed=seed, instances_checked=len(triples))
    for alpha, beta, gamma in triples:
        try:
            witness_theorem(alpha, beta, gamma, normalize=True)
        except CatpolyError as e:
            report.failures.append(f"({_fmt(alpha)}; {_fmt(beta)}; {_fmt(gamma)}): {e}")
    return report


# ---------------------------------------------------------------------------
# Free-tree checks
# ---------------------------------------------------------------------------

def _tree_key_worker(trees: List[Tree]) -> List[Tuple[str, str]]:
    return [(canonical_code(t), u_polynomial_tree(t).canonical_key()) for t in trees]


def _tree_u_groups(n: int, jobs: int, force: bool) -> Tuple[List[Tree], Dict[str, List[str]]]:
    chunk_size, progress = _settings()
    trees = list(enumerate_free_trees(n, force=force))
    results = run_chunks(_tree_key_worker, list(chunked(trees, chunk_size)), jobs=jobs, progress=progress, desc='trees')
    groups: Dict[str, List[str]] = defaultdict(list)
    for chunk in results:
        for code, key in chunk:
            groups[key].append(code)
    return trees, groups


def check_stanley_trees(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """Free trees on n vertices are distinguished by U, and their count matches the known sequence."""
    trees, groups = _tree_u_groups(n, jobs, force)
    report = VerificationReport(check_name='trees', parameter_n=n, instances_checked=len(trees))
    expected = FREE_TREE_COUNTS.get(n)
    if expected is not None and expected != len(trees):
        report.failures.append(f"enumerated {len(trees)} trees, expected {expected}")
    if len({canonical_code(t) for t in trees}) != len(trees):
        report.failures.append("enumeration produced isomorphic duplicates")
    for key, codes in sorted(groups.items()):
        if len(codes) > 1:
            report.failures.append(f"U-collision among {len(codes)} trees: {key}")
    report.details['classes'] = len(trees)
    return report


def check_corollary_l_implies_u(n: int, jobs: int = 1, force: bool = False, **_) -> VerificationReport:
    """An L-unique proper composition gives a caterpillar that is U-unique among all trees."""
    enforce_cap('MAX_COMPOSITION_N', n, _composition_cost(n), force=force)
    _, groups = _tree_u_groups(n, jobs, force)
    report = VerificationReport(check_name='l-implies-u', parameter_n=n)
    for beta in proper_caterpillar_compositions(n):
        if not is_l_unique(beta):
            continue
        report.instances_checked += 1
        key = u_polynomial_tree(psi(beta)).canonical_key()
        if len(groups.get(key, ())) != 1:
            report.failures.append(f"Psi({_fmt(beta)}) shares U with {len(groups.get(key, ())) - 1} other trees")
    return report


def _bruteforce_worker(trees: List[Tree]) -> List[str]:
    failures = []
    for tree in trees:
        fast = u_polynomial_tree(tree)
        slow = u_polynomial_bruteforce(tree, include_y=False)
        if fast != slow.x_part():
            failures.append(f"tree DP disagrees with edge-subset sum on: {format_tree(tree).replace(chr(10), '; ')}")
    return failures


def check_fast_u_matches_bruteforce(n: int, jobs: int = 1, force: bool = False, samples: Optional[int] = None,
                                    seed: Optional[int] = None, **_) -> VerificationReport:
    """Tree DP equals the edge-subset sum on every tree up to n vertices and on random larger trees.

    Random trees have between n + 1 and n + 6 vertices, within MAX_BRUTEFORCE_EDGES.
    """
    enforce_cap('MAX_BRUTEFORCE_EDGES', n + 5, f"2^{n + 5} edge subsets per random tree", force=force)
    cfg = get_config()
    seed = cfg.DEFAULT_SEED if seed is None else seed
    samples = 500 if samples is None else samples
    chunk_size, progress = _settings()
    trees: List[Tree] = []
    for order in range(1, n + 1):
        trees.extend(enumerate_free_trees(order, force=force))
    exhaustive = len(trees)
    rng = random.Random(seed)
    trees.extend(random_tree(rng.randint(n + 1, n + 6), rng) for _ in range(samples))
    results = run_chunks(_bruteforce_worker, list(chunked(trees, chunk_size)), jobs=jobs,
                         progress=progress, desc='brute force')
    report = VerificationReport(check_name='fast-u', parameter_n=n, seed=seed, instances_checked=len(trees))
    for failures in results:
        report.failures.extend(failures)
    report.details['exhaustive'] = exhaustive
    report.details['random'] = samples
    return report


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[..., VerificationReport]
    default_n: int
    summary: str


CHECKS: Dict[str, Check] = {c.name: c for c in [
    Check('sym-lclass', check_sym_equals_lclass, 12, "symmetry class equals L-class"),
    Check('palindromes', check_palindromes_unique, 12, "palindromes are L-unique"),
    Check('unique-factorization', check_unique_factorization, 12, "irreducible factorization is unique"),
    Check('known-unique', check_known_unique_families, 12, "known L-unique families"),
    Check('ul-equals-l', check_ul_equals_l, 16, "U^L(T) = L(Phi(T))"),
    Check('x1', check_x1_proposition, 12, "U and U^L agree off part 1"),
    Check('main-result', check_main_result, 20, "proper caterpillars are U-distinguished"),
    Check('u-determines-l', check_u_determines_l, 16, "U without part-1 terms equals L"),
    Check('proof-chain', check_proof_chain, 14, "every L-equal pair has a witness"),
    Check('witness', check_witness_samples, 30, "random witness triples"),
    Check('trees', check_stanley_trees, 13, "free trees are U-distinguished"),
    Check('l-implies-u', check_corollary_l_implies_u, 12, "L-unique implies U-unique"),
    Check('fast-u', check_fast_u_matches_bruteforce, 9, "tree DP equals brute force"),
]}


def run_check(name: str, n: Optional[int] = None, jobs: int = 1, force: bool = False,
              samples: Optional[int] = None, seed: Optional[int] = None) -> VerificationReport:
    """Run a registered check by name and time it."""
    try:
        check = CHECKS[name]
    except KeyError:
        raise HypothesisError('known-check', f"unknown check {name!r}; expected one of {', '.join(CHECKS)}")
    n = check.default_n if n is None else n
    logger.info(f"Running check {name} with n={n}, jobs={jobs}")
    started = time.perf_counter()
    report = check.run(n, jobs=jobs, force=force, samples=samples, seed=seed)
    report.elapsed = time.perf_counter() - started
    if report.passed:
        logger.info(f"✅ {name} passed on {report.instances_checked} instances in {report.elapsed:.2f}s")
    else:
        logger.error(f"❌ {name} failed: {len(report.failures)} failures out of {report.instances_checked}")
    return report
