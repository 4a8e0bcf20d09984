"""Bundled verification data.

Two reference quadruples of triangles with known exact tangent counts (62
and 40), the four-line configuration whose two transversals are known in
closed form, and the baseline tangent-count distribution of a 5,000,000
sample run over integer vertices in [-1000, 1000]^3 used for statistical
comparison by the search harness.

Coordinates are kept as decimal strings and parsed exactly on demand; the
verification suite must not depend on external files.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .exact import parse_decimal
from .geometry import PluckerLine, Triangle, plucker_from_points, vec

TANGENTS_62_VERTICES = [
    [
        ("-10.5", "1", "-10.5"),
        (".5628568345479573470378601", "1", ".5628568345479573470378601"),
        (
            ".56285683454726874605620706",
            ".99999999999822994290647247",
            ".56285683454726874605620706",
        ),
    ],
    [
        ("-10.5", "-1", "10.5"),
        ("1.394218989475", "-1", "-1.394218989475"),
        (
            "1.3942406911811439954597161",
            "-1.0000237884694881275439271",
            "-1.3942406911811439954597161",
        ),
    ],
    [
        ("-9.5", "-9.5", ".25"),
        (".685825", ".685825", ".25"),
        (
            ".69121730616063647303519136",
            ".69121730616063647303519136",
            ".26069756890079842876805653",
        ),
    ],
    [
        ("9.5", "0", "0"),
        ("-.511", "0", "0"),
        ("-1.0873912730501133759642956", "0", "-.51645811088049333541289247"),
    ],
]

TANGENTS_40_VERTICES = [
    [(-4, -731, -336), (297, -507, 978), (824, -62, -359)],
    [(531, -631, -820), (-24, -716, 713), (807, 377, 177)],
    [(586, -205, 952), (861, -774, 235), (-450, 758, 161)],
    [(330, -141, -908), (942, -920, 651), (-226, 489, 968)],
]


def _triangle(verts, index: int) -> Triangle:
    parsed = []
    for v in verts:
        parsed.append(
            tuple(parse_decimal(c) if isinstance(c, str) else Q(c) for c in v)
        )
    return Triangle(*parsed, index=index)


def tangents_62_quadruple() -> list[Triangle]:
    """Quadruple of very thin triangles with exactly 62 common tangents."""
    return [
        _triangle(v, i + 1) for i, v in enumerate(TANGENTS_62_VERTICES)
    ]


def tangents_40_quadruple() -> list[Triangle]:
    """Integer-vertex quadruple with exactly 40 common tangents."""
    return [
        _triangle(v, i + 1) for i, v in enumerate(TANGENTS_40_VERTICES)
    ]


def ruled_four_lines() -> list[PluckerLine]:
    """Four lines with two real transversals, given parametrically as
    (t, 1, t), (t, -1, -t), (t, t, 1/4), (t, 0, 0)."""
    return [
        plucker_from_points(vec(0, 1, 0), vec(1, 1, 1)),
        plucker_from_points(vec(0, -1, 0), vec(1, -1, -1)),
        plucker_from_points(vec(0, 0, Q(1, 4)), vec(1, 1, Q(1, 4))),
        plucker_from_points(vec(0, 0, 0), vec(1, 0, 0)),
    ]


def ruled_transversal_pair() -> list[PluckerLine]:
    """The two transversals (1/2, 2t, t) and (-1/2, 2t, -t) of the four
    lines above."""
    return [
        plucker_from_points(vec(Q(1, 2), 0, 0), vec(Q(1, 2), 2, 1)),
        plucker_from_points(vec(Q(-1, 2), 0, 0), vec(Q(-1, 2), 2, -1)),
    ]


# tangent count -> frequency over 5,000,000 random integer quadruples in
# the [-1000, 1000]^3 cube (baseline for statistical comparison)
BASELINE_SAMPLES = 5_000_000
BASELINE_DISTRIBUTION = {
    0: 1_515_706,
    2: 331_443,
    4: 646_150,
    6: 403_679,
    8: 637_202,
    10: 327_159,
    12: 358_312,
    14: 238_913,
    16: 253_396,
    18: 114_046,
    20: 80_199,
    22: 44_870,
    24: 27_726,
    26: 12_426,
    28: 5_796,
    30: 2_016,
    32: 813,
    34: 111,
    36: 30,
    38: 3,
    40: 4,
}
