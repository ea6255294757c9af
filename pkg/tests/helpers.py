from __future__ import annotations

from ccattack.lfsr import LfsrState

# Filled by the acceptance tests, printed by the terminal-summary hook.
ACCEPTANCE_LINES: list[str] = []


def random_state(rng, poly) -> LfsrState:
    while True:
        reg = rng.integers(0, 2, poly.degree)
        if reg.any():
            return LfsrState.of(poly, reg)
