"""Bounded integer sums by the prefix-greedy rule."""

from typing import Sequence

from src.errors import SumTooLarge


def greedy_bounded_sum(b: Sequence[int], target: int) -> tuple[int, ...]:
    """Non-negative a with a_i <= b_i and sum(a) = target.

    Copies b up to the longest prefix whose sum stays <= target, puts the
    remainder in the next slot and zeros after it.

    Raises:
        SumTooLarge: If target exceeds sum(b)
        ValueError: If an input is negative
    """
    if target < 0 or any(x < 0 for x in b):
        raise ValueError(f"Inputs must be non-negative: b={list(b)}, target={target}")
    if target > sum(b):
        raise SumTooLarge(f"Target {target} exceeds sum {sum(b)} of {list(b)}")

    result = [0] * len(b)
    remaining = target
    for i, bound in enumerate(b):
        if bound <= remaining:
            result[i] = bound
            remaining -= bound
        else:
            result[i] = remaining
            break
    return tuple(result)
