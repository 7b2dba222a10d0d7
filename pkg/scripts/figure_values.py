#!/usr/bin/env python3
"""Print each figure graph's computed eigenvalue next to the value quoted for it."""

import json

from lapgirth.experiments import figure_table

QUOTED = [
    ("K23DoubleStar", 2, 4.414),
    ("K24Minus", 2, 3.572),
    ("Q1", 4, 2.555),
    ("Q1", 5, 2.555),
    ("Q4", 5, 2.746),
    ("F", 2, 4.01),
    ("K24Sub", 3, 2.382),
    ("G1", 3, 4.0),
    ("G2", 4, 4.0),
]

if __name__ == "__main__":
    for row in figure_table(QUOTED):
        print(json.dumps(row))
