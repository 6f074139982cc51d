"""Print the level dimensions of the enhanced algebra next to C(r,l)^2 (2l-1)!!."""

from enhanced_brauer.algebra import dimension_table
from enhanced_brauer.forms import make_group

for kind, n, r in [("orthogonal", 4, 2), ("symplectic", 6, 2), ("orthogonal", 6, 3), ("orthogonal", 2, 2)]:
    g = make_group(kind, n)
    table = dimension_table(g, r)
    cells = "  ".join(f"l={row['l']}: {row['dim']}" + (f"/{row['expected']}" if row["expected"] else "")
                      for row in table["levels"])
    print(f"{g.name} r={r}:  {cells}  total {table['total']}  direct={table['direct_sum']}")
