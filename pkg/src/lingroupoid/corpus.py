"""Reference multiplication tables.

``DISTINGUISHING`` holds, for each nontrivial length-6 identity, a groupoid
satisfying it and none of the other thirteen. These are not always the
smallest such groupoids: see ``search_model``. ``PRODUCT_A`` and
``PRODUCT_B`` multiply to a groupoid of order 72 satisfying ``(xy)z=y(zx)``
and no length-8 identity it does not imply. ``POWER_WITNESS`` satisfies
``x((yz)u)=z((ux)y)`` but not ``x((yz)u)=u((xy)z)``.

Tables use the text format read by :func:`lingroupoid.models.parse_table`.
"""

DISTINGUISHING = {
    "<3|1|1|(1,2)>": """\
3
0 1 0
0 1 2
1 1 1
""",
    "<3|0|0|(1,2)>": """\
4
0 0 3 2
0 0 3 0
0 0 3 2
0 0 3 2
""",
    "<3|0|0|(2,3)>": """\
4
0 3 3 3
1 1 1 1
2 0 0 0
3 2 2 2
""",
    "<3|0|1|()>": """\
4
0 0 2 2
1 1 3 3
0 0 2 2
1 1 3 3
""",
    "<3|0|1|(1,2)>": """\
4
0 1 2 2
0 1 3 3
0 1 2 2
0 1 2 2
""",
    "<3|0|1|(2,3)>": """\
4
0 0 3 0
1 1 1 1
2 2 2 2
0 0 3 0
""",
    "<3|1|1|(2,3)>": """\
4
0 0 3 0
1 1 0 1
1 1 0 1
0 0 0 0
""",
    "<3|0|0|(1,3)>": """\
5
0 3 4 1 2
2 1 0 4 3
3 4 2 0 1
4 2 1 3 0
1 0 3 2 4
""",
    "<3|1|1|(1,3)>": """\
5
0 3 0 1 1
1 0 1 3 3
0 3 0 1 1
3 1 4 0 0
3 1 3 0 0
""",
    "<3|0|1|(1,3)>": """\
6
3 0 1 3 3 4
4 3 1 3 0 3
5 5 3 3 1 1
3 3 3 3 3 3
3 4 5 3 3 0
0 3 5 3 4 3
""",
    "<3|0|1|(1,2,3)>": """\
6
3 3 3 3 4 3
4 3 3 4 3 3
3 4 3 5 4 3
3 4 5 3 3 3
4 3 4 3 3 3
3 3 3 3 3 3
""",
    "<3|0|0|(1,2,3)>": """\
9
2 3 4 4 4 4 8 4 4
2 3 6 6 4 4 4 4 4
5 5 4 4 4 4 4 4 4
5 5 7 7 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 7 4 4 4 4 4 4 4
7 7 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
""",
    "<3|0|1|(1,3,2)>": """\
9
3 3 3 4 4 7 8 4 4
4 4 6 4 4 7 4 4 4
5 3 5 4 4 7 8 4 4
4 4 7 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 8 7 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
""",
    "<3|1|1|(1,2,3)>": """\
9
1 3 1 4 4 3 4 4 7
4 4 8 4 4 7 4 4 4
5 3 5 7 4 3 4 4 7
4 4 6 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 4 8 4 4 7 4 4 4
4 4 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
4 4 4 4 4 4 4 4 4
""",
}

PRODUCT_A = """\
9
2 3 5 7 5 6 8 8 8
4 3 6 6 6 6 8 8 8
5 5 6 8 8 8 8 8 8
6 6 6 8 8 8 8 8 8
7 7 6 8 8 8 8 8 8
6 8 8 8 8 8 8 8 8
8 8 8 8 8 8 8 8 8
6 8 8 8 8 8 8 8 8
8 8 8 8 8 8 8 8 8
"""

PRODUCT_B = """\
8
2 3 2 7 2 6 2 2
4 2 2 2 5 2 2 6
2 2 2 2 2 2 2 2
2 5 2 2 6 2 2 2
7 2 2 6 2 2 2 2
6 2 2 2 2 2 2 2
2 2 2 2 2 2 2 2
2 6 2 2 2 2 2 2
"""

POWER_WITNESS = """\
3
0 1 2
2 0 1
1 2 0
"""


def corpus_names() -> list[str]:
    return [*DISTINGUISHING, "A", "B", "power-witness"]


def corpus_text(name: str) -> str:
    if name in DISTINGUISHING:
        return DISTINGUISHING[name]
    extra = {"A": PRODUCT_A, "B": PRODUCT_B, "power-witness": POWER_WITNESS}
    if name not in extra:
        raise KeyError(f"no corpus table named {name!r}")
    return extra[name]
