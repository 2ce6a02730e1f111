# harness/presets.py
"""Built-in scenarios, kept as TOML text so they go through the same loader as files."""

Z4_TORUS2 = """
name = "z4-torus2"
description = "Z/4 rotating T^2 by a quarter turn, line bundle with a nontrivial character cocycle"
dim = 2
band = 1
jet_order = 2

[group]
kind = "generated"
[group.generators.r]
matrix = [[0, -1], [1, 0]]
translation = ["0", "0"]

[bundle]
rank = 1
[[bundle.cocycle]]
element = "r"
row = 1
col = 1
form = "1 * e[1,0] * dx{}"

[connection]
average = false
[[connection.potential]]
row = 1
col = 1
form = '''
1 * e[1,0] * dx{1}
-1 * e[1,1] * dx{1}
2 * e[0,1] * dx{2}
3 * e[0,0] * dx{2}
'''
"""

CIRCLE_TORUS2 = """
name = "circle-torus2"
description = "circle translating T^2 along (1, 1), rank 2 bundle with charges (2, 0)"
dim = 2
band = 1
jet_order = 2

[group]
kind = "circle"
direction = [1, 1]

[bundle]
rank = 2
charges = [2, 0]

[connection]
average = false
[[connection.potential]]
row = 1
col = 1
form = "1 * e[1,-1] * dx{1}"
[[connection.potential]]
row = 1
col = 2
form = "1 * e[0,0] * dx{2}"
[[connection.potential]]
row = 2
col = 1
form = "1 * e[1,0] * dx{1}"
[[connection.potential]]
row = 2
col = 2
form = "2 * e[0,1] * dx{2}"
"""

TRIVIAL_TORUS2 = """
name = "trivial-torus2"
description = "trivial group on T^2, line bundle with a nonflat connection"
dim = 2
band = 1

[group]
kind = "trivial"

[bundle]
rank = 1

[[connection.potential]]
row = 1
col = 1
form = "1 * e[0,1] * dx{1}"
"""

Z2_POINT = """
name = "z2-point"
description = "Z/2 acting trivially on a point"
dim = 0
band = 0

[group]
kind = "table"
labels = ["e", "s"]
table = [["e", "s"], ["s", "e"]]

[bundle]
rank = 1
"""

Z4_POINT = """
name = "z4-point"
description = "Z/4 acting trivially on a point"
dim = 0
band = 0

[group]
kind = "table"
labels = ["e", "a", "a2", "a3"]
table = [
    ["e", "a", "a2", "a3"],
    ["a", "a2", "a3", "e"],
    ["a2", "a3", "e", "a"],
    ["a3", "e", "a", "a2"],
]

[bundle]
rank = 1
"""

Z2_FLIP_TORUS2 = """
name = "z2-flip-torus2"
description = "Z/2 acting on T^2 by x -> -x, cocycle e_(1,1)"
dim = 2
band = 1

[group]
kind = "generated"
[group.generators.s]
matrix = [[-1, 0], [0, -1]]

[bundle]
rank = 1
[[bundle.cocycle]]
element = "s"
row = 1
col = 1
form = "1 * e[1,1] * dx{}"

[[connection.potential]]
row = 1
col = 1
form = '''
1 * e[0,1] * dx{1}
1 * e[1,0] * dx{2}
'''
"""

Z2_SHIFT_TORUS2 = """
name = "z2-shift-torus2"
description = "Z/2 acting on T^2 by a half translation, conductor 2"
dim = 2
band = 1

[group]
kind = "generated"
[group.generators.t]
matrix = [[1, 0], [0, 1]]
translation = ["1/2", "0"]

[bundle]
rank = 1

[[connection.potential]]
row = 1
col = 1
form = '''
1 * e[1,0] * dx{2}
-1 * e[0,1] * dx{1}
'''
"""

PRESETS = {
    "z4-torus2": Z4_TORUS2,
    "circle-torus2": CIRCLE_TORUS2,
    "trivial-torus2": TRIVIAL_TORUS2,
    "z2-point": Z2_POINT,
    "z4-point": Z4_POINT,
    "z2-flip-torus2": Z2_FLIP_TORUS2,
    "z2-shift-torus2": Z2_SHIFT_TORUS2,
}
