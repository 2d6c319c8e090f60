"""Exact homology of finite strict higher categories.

The package builds finite strict omega-categories from pasting schemes
(cubes, simplexes, globes, graphs, cell complexes, presentations),
constructs their simplicial nerves, and computes several exact integer
homology theories of those nerves together with the comparison maps
between them.
"""

from __future__ import annotations

__version__ = "0.1.0"
