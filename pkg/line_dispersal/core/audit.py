"""Exact invariant audit of a configuration against its instance.

The audit evaluates the local-optimality conditions the solver maintains:

* Property 1, per maximal chain: |L| + |O| > |R| (moving the chain left costs).
* Property 2, per maximal chain: |L| <= |O| + |R| (moving it right never pays).
* the prefix inequality |L| + |O| > |R| for every prefix of every chain.
* at least one stationary point per chain (implied by the two properties).

All checks are integer comparisons, there are no tolerances.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from .chains import ChainView, decompose_chains
from .model import Configuration, ProblemInstance


@dataclass(frozen=True)
class AuditReport:
    independent: bool
    order_preserved: bool
    prop1_ok: Tuple[bool, ...] = ()
    prop2_ok: Tuple[bool, ...] = ()
    prefix_ok: bool = False
    stationary_per_chain: bool = False
    chains: Tuple[ChainView, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return (
            self.independent
            and self.order_preserved
            and all(self.prop1_ok)
            and all(self.prop2_ok)
            and self.prefix_ok
            and self.stationary_per_chain
        )

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "independent": self.independent,
            "order_preserved": self.order_preserved,
            "prop1_ok": list(self.prop1_ok),
            "prop2_ok": list(self.prop2_ok),
            "prefix_ok": self.prefix_ok,
            "stationary_per_chain": self.stationary_per_chain,
            "chains": [c.to_dict() for c in self.chains],
        }


def order_preserved(inst: ProblemInstance, cfg: Configuration) -> bool:
    """True iff initial[i] < initial[j] implies cfg[i] < cfg[j] for every pair.

    Points with equal initial positions form a group; the order is preserved
    iff every group lies strictly right of everything in earlier groups.
    """
    init, pos = inst.initial, cfg.positions
    running_max = None
    i = 0
    while i < inst.n:
        j = i
        while j + 1 < inst.n and init[j + 1] == init[i]:
            j += 1
        group = pos[i:j + 1]
        if running_max is not None and running_max >= min(group):
            return False
        top = max(group)
        running_max = top if running_max is None else max(running_max, top)
        i = j + 1
    return True


def _prefixes_ok(inst: ProblemInstance, cfg: Configuration, chain: ChainView) -> bool:
    lo, r = 0, 0
    for i in range(chain.start, chain.end + 1):
        if cfg.positions[i] > inst.initial[i]:
            r += 1
        else:
            lo += 1
        if lo <= r:
            return False
    return True


def audit(inst: ProblemInstance, cfg: Configuration) -> AuditReport:
    """Audits cfg; chain checks are skipped (reported False) when cfg is not independent."""
    preserved = len(cfg.positions) == inst.n and order_preserved(inst, cfg)
    if len(cfg.positions) != inst.n or not cfg.is_independent(inst.delta):
        return AuditReport(independent=False, order_preserved=preserved)

    chains = tuple(decompose_chains(inst, cfg))
    return AuditReport(
        independent=True,
        order_preserved=preserved,
        prop1_ok=tuple(c.left_slope > 0 for c in chains),
        prop2_ok=tuple(c.right_slope >= 0 for c in chains),
        prefix_ok=all(_prefixes_ok(inst, cfg, c) for c in chains),
        stationary_per_chain=all(c.cnt_o >= 1 for c in chains),
        chains=chains,
    )
