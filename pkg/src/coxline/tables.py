"""Reference designs: the worked examples and the published performance table.

``printed_alphas`` are the values exactly as published (rounded); they are
kept for comparison only and never feed the computation.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TableEntry:
    b: int
    w1: tuple[int, ...]
    roots: tuple[tuple[int, ...], ...]
    printed_alphas: tuple[float, ...]


TABLE = (
    TableEntry(1, (1, -1), ((-1, 1),), (1.0,)),
    TableEntry(2, (-1, 0, 1), ((-1, 1, 0), (1, -1, 0)), (0.71, 1.22)),
    TableEntry(
        3, (-3, -1, 1, 3), ((-3, 3, 1, -1), (-1, -3, 3, 1), (1, -1, -3, 3)), (0.77, 1.1, 1.1)
    ),
    TableEntry(
        3, (-1, 0, 0, 1), ((-1, 0, 1, 0), (0, -1, 0, 1), (0, 1, -1, 0)), (0.87, 0.87, 1.22)
    ),
    TableEntry(
        3, (-3, 1, 1, 1), ((-1, 3, -1, -1), (-1, -1, 3, -1), (-1, -1, -1, 3)), (1.0, 1.0, 1.0)
    ),
    TableEntry(
        4,
        (-2, -1, 0, 1, 2),
        ((-2, 1, 0, -1, 2), (-1, -2, 1, 0, 2), (-1, 0, 1, 2, -2), (0, -1, -2, 1, 2)),
        (0.63, 0.89, 0.89, 1.41),
    ),
    TableEntry(
        5,
        (1, -1, 3, -3, 5, -5),
        (
            (-1, 1, 5, -5, 3, -3),
            (3, -3, 1, -5, 5, -1),
            (3, -3, 5, -1, 1, -5),
            (3, 5, -3, -1, 1, -5),
            (-5, -3, 1, 3, 5, -1),
        ),
        (0.66, 0.76, 0.76, 1.31, 1.31),
    ),
    TableEntry(
        5,
        (-2, -1, 0, 0, 1, 2),
        (
            (-2, -1, 2, 0, 1, 0),
            (-2, 0, -1, 0, 2, 1),
            (-2, 1, 0, 0, -1, 2),
            (0, -2, -1, 2, 0, 1),
            (0, -1, 0, -2, 1, 2),
        ),
        (0.71, 1.0, 1.0, 1.0, 1.22),
    ),
    TableEntry(
        5,
        (1, -1, -3, -1, 1, 3),
        (
            (1, 1, -3, -1, -1, 3),
            (1, 1, -3, -1, 3, -1),
            (-1, -1, 1, -3, 1, 3),
            (-1, -1, -3, 1, 1, 3),
            (3, -3, -1, 1, -1, 1),
        ),
        (0.67, 0.67, 1.17, 1.17, 1.17),
    ),
)
