"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Quadrature - Five-point Gauss-Legendre rules on segment lists.

Exact for polynomials up to degree 9 on every segment.
"""

from typing import Callable, List, Sequence, Tuple

import numpy as np

GAUSS_NODES, GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(5)

Integrand = Callable[[np.ndarray], np.ndarray]


def segment_integrals(f: Integrand, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Integrate f over every segment [a_j, b_j].

    Args:
        f: Vectorized integrand returning shape (m,) or (k, m) for m points
        a: Segment starts
        b: Segment ends

    Returns:
        Integrals of shape (S,) or (k, S)
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    points = mid[:, None] + half[:, None] * GAUSS_NODES[None, :]
    values = np.asarray(f(points.ravel()), dtype=float)

    if values.ndim <= 1:
        values = np.broadcast_to(values, points.size).reshape(points.shape)
        return (values @ GAUSS_WEIGHTS) * half

    values = values.reshape(values.shape[0], *points.shape)
    return (values @ GAUSS_WEIGHTS) * half[None, :]


def split_domain(
    x_left: float,
    x_right: float,
    excluded: Sequence[Tuple[float, float]] = ()
) -> List[Tuple[float, float]]:
    """
    Pieces of [x_left, x_right] left after removing the excluded intervals.

    Degenerate intervals (a == b) split the domain at that point.

    Args:
        x_left: Domain start
        x_right: Domain end
        excluded: Closed intervals to remove

    Returns:
        Sorted list of (start, end) pieces of positive length
    """
    pieces = [(x_left, x_right)]
    for a, b in sorted((min(a, b), max(a, b)) for a, b in excluded):
        next_pieces = []
        for start, end in pieces:
            if b < start or a > end:
                next_pieces.append((start, end))
                continue
            if a > start:
                next_pieces.append((start, a))
            if b < end:
                next_pieces.append((b, end))
        pieces = next_pieces
    return [(start, end) for start, end in pieces if end > start]


def composite_integral(
    f: Integrand,
    x_left: float,
    x_right: float,
    excluded: Sequence[Tuple[float, float]] = (),
    subintervals: int = 10_000
) -> float:
    """
    Composite Gauss-Legendre integral of a scalar integrand over the domain minus excluded.

    Subintervals are distributed over the pieces in proportion to their length.

    Args:
        f: Vectorized scalar integrand
        x_left: Domain start
        x_right: Domain end
        excluded: Intervals (or points) removed from the domain
        subintervals: Total number of subintervals

    Returns:
        The integral
    """
    pieces = split_domain(x_left, x_right, excluded)
    total_length = sum(end - start for start, end in pieces)
    starts = []
    ends = []
    for start, end in pieces:
        count = max(1, int(round(subintervals * (end - start) / total_length)))
        edges = np.linspace(start, end, count + 1)
        starts.append(edges[:-1])
        ends.append(edges[1:])
    if not starts:
        return 0.0
    return float(np.sum(segment_integrals(f, np.concatenate(starts), np.concatenate(ends))))
