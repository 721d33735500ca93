"""Batch verification of the solver against the oracles."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from .. import config
from ..core.audit import audit
from ..oracles import ORACLES, check_pointwise_minimal
from ..solver import solve
from ..errors import GenSpecError
from .generation import Family, GenSpec, gen_instance

logger = logging.getLogger(__name__)

DELTA_CHOICES = (1, 2, 3, 5, 10)


@dataclass(frozen=True)
class VerifyFailure:
    index: int
    spec: GenSpec
    reason: str
    solver_cost: Optional[str] = None
    oracle_cost: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "spec": self.spec.to_dict(),
            "reason": self.reason,
            "solver_cost": self.solver_cost,
            "oracle_cost": self.oracle_cost,
        }


@dataclass
class VerifyReport:
    oracle: str
    count: int
    failures: List[VerifyFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle,
            "count": self.count,
            "mismatches": len(self.failures),
            "failures": [f.to_dict() for f in self.failures],
        }


def batch_specs(count: int, size_range: Tuple[int, int], seed: int,
                families: Optional[Sequence[Family]] = None) -> List[GenSpec]:
    """Deterministic GenSpecs for a batch: n, delta and family drawn from seed."""
    nmin, nmax = size_range
    if count < 0 or nmin < 0 or nmax < nmin:
        raise GenSpecError(f"invalid batch: count={count}, size range [{nmin}, {nmax}]")
    families = list(families) if families else list(Family)
    rng = np.random.default_rng(seed)
    item_seeds = np.random.SeedSequence(seed).generate_state(count, dtype=np.uint64) if count else []
    specs = []
    for k in range(count):
        n = int(rng.integers(nmin, nmax, endpoint=True))
        delta = int(rng.choice(DELTA_CHOICES))
        family = Family(families[k % len(families)])
        if family is Family.ADVERSARIAL_SINGLE_CHAIN and delta < 2:
            delta = 2
        coord_range = max(1, int(rng.integers(1, 2 * n * delta + 2)))
        specs.append(GenSpec(int(item_seeds[k]), n, coord_range, delta, family))
    return specs


def verify_one(index: int, spec: GenSpec, oracle_choice: str) -> List[VerifyFailure]:
    """Solver vs one oracle on one generated instance, plus the full output audit."""
    inst = gen_instance(spec)
    result = solve(inst)
    failures = []

    report = audit(inst, result.configuration)
    if not report.ok:
        failures.append(VerifyFailure(index, spec, f"audit failed: {report.to_dict()}"))

    oracle = ORACLES[oracle_choice](inst)
    if oracle.best_cost != result.total_cost:
        failures.append(VerifyFailure(index, spec, "cost mismatch", str(result.total_cost), str(oracle.best_cost)))
    if oracle_choice == "naive" and oracle.witness != result.configuration:
        failures.append(VerifyFailure(index, spec, "configuration differs from the naive implementation"))
    if oracle_choice == "exhaustive" and not check_pointwise_minimal(result.configuration, oracle.all_optima):
        failures.append(VerifyFailure(index, spec, "solver is not pointwise left of every anchored optimum"))
    return failures


def _verify_star(args) -> List[VerifyFailure]:
    return verify_one(*args)


def verify_batch(count: int, size_range: Tuple[int, int], oracle_choice: str, seed: int = config.DEFAULT_SEED,
                 families: Optional[Sequence[Family]] = None, workers: int = config.VERIFY_WORKERS,
                 progress: bool = False) -> VerifyReport:
    if oracle_choice not in ORACLES:
        raise GenSpecError(f"unknown oracle {oracle_choice!r}; choose from {sorted(ORACLES)}")
    if oracle_choice == "exhaustive" and size_range[1] > config.EXHAUSTIVE_MAX_N:
        raise GenSpecError(f"exhaustive oracle needs nmax <= {config.EXHAUSTIVE_MAX_N}")

    specs = batch_specs(count, size_range, seed, families)
    jobs = [(k, spec, oracle_choice) for k, spec in enumerate(specs)]
    report = VerifyReport(oracle_choice, count)

    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps submission order, so the report is independent of completion order
            results = list(tqdm(pool.map(_verify_star, jobs, chunksize=max(1, count // (4 * workers))),
                                total=count, desc=f"verify/{oracle_choice}", disable=not progress))
    else:
        results = [_verify_star(job) for job in tqdm(jobs, desc=f"verify/{oracle_choice}", disable=not progress)]

    for failures in results:
        report.failures.extend(failures)
    logger.info(f"verify {oracle_choice}: {count} instances, {len(report.failures)} mismatches")
    return report
