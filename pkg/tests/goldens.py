"""Golden reference data shared by the test suite.

The genus-10 and genus-11 rows below are the expected weak-conjugacy
classification of non-split metacyclic actions (quaternion classes excluded
at genus 11).  Each entry is (group label, data set, D_G, D_F) where the two
cyclic factors are written in canonical grouped notation.  Every row was
verified independently: both validators accept the data set, the genus is
correct, and the factors were re-derived by hand for spot checks.
"""

# (label, representative data set, D_G, D_F)
G10_ROWS = [
    ("M(2,4,2,-1)",
     "((2·4,2,-1),0;[(0,1),(1,2),2],[(1,4),(0,1),4]_3,[(0,1),(1,4),4],[(1,4),(3,4),4])",
     "(4,0;((1,4),3),((3,4),3),((1,2),4))",
     "(4,1;(1,4),(3,4),((1,2),6))"),
    ("M(2,4,2,-1)",
     "((2·4,2,-1),0;[(0,1),(1,2),2],[(1,4),(0,1),4],[(0,1),(1,4),4]_3,[(3,4),(1,4),4])",
     "(4,1;(1,4),(3,4),((1,2),6))",
     "(4,0;((1,4),3),((3,4),3),((1,2),4))"),
    ("M(2,4,2,-1)",
     "((2·4,2,-1),0;[(0,1),(1,2),2],[(1,4),(0,1),4],[(0,1),(3,4),4],[(1,4),(1,4),4]_3)",
     "(4,1;(1,4),(3,4),((1,2),6))",
     "(4,1;(1,4),(3,4),((1,2),6))"),
    ("M(2,4,2,-1)",
     "((2·4,2,-1),0;[(0,1),(1,2),2]_4,[(1,4),(0,1),4],[(0,1),(1,4),4],[(3,4),(1,4),4])",
     "(4,0;(1,4),(3,4),((1,2),10))",
     "(4,0;(1,4),(3,4),((1,2),10))"),
    ("M(2,4,2,-1)",
     "((2·4,2,-1),1;[(1,4),(0,1),4],[(0,1),(1,4),4],[(1,4),(1,4),4])",
     "(4,2;(1,4),(3,4),((1,2),2))",
     "(4,2;(1,4),(3,4),((1,2),2))"),
    ("M(2,8,4,-1)",
     "((2·8,4,-1),0;[(1,4),(0,1),4],[(1,4),(1,8),4],[(0,1),(1,4),4],[(0,1),(1,8),8])",
     "(4,1;(1,4),(3,4),((1,2),6))",
     "(8,0;(1,8),(7,8),(1,4),(3,4),((1,2),2))"),
    ("M(2,8,4,-1)",
     "((2·8,4,-1),0;[(1,4),(0,1),4],[(1,4),(7,8),4],[(0,1),(1,4),4],[(0,1),(3,8),8])",
     "(4,1;(1,4),(3,4),((1,2),6))",
     "(8,0;(3,8),(5,8),(1,4),(3,4),((1,2),2))"),
    ("M(2,12,6,7)",
     "((2·12,6,7),0;[(1,4),(1,12),12],[(3,4),(1,3),12],[(0,1),(1,12),12])",
     "(4,2;(1,4),(3,4),((1,2),2))",
     "(12,0;(1,12),(7,12),((1,6),2))"),
    ("M(2,12,6,7)",
     "((2·12,6,7),0;[(1,4),(1,6),12],[(3,4),(5,12),12],[(0,1),(5,12),12])",
     "(4,2;(1,4),(3,4),((1,2),2))",
     "(12,0;(5,12),(11,12),((5,6),2))"),
    ("M(2,20,10,-1)",
     "((2·20,10,-1),0;[(1,4),(0,1),4],[(1,4),(9,20),4],[(0,1),(1,20),20])",
     "(4,0;(1,4),(3,4),((1,2),10))",
     "(20,0;(1,20),(19,20),((1,2),2))"),
    ("M(2,20,10,-1)",
     "((2·20,10,-1),0;[(1,4),(0,1),4],[(1,4),(7,20),4],[(0,1),(3,20),20])",
     "(4,0;(1,4),(3,4),((1,2),10))",
     "(20,0;(3,20),(17,20),((1,2),2))"),
    ("M(2,20,10,-1)",
     "((2·20,10,-1),0;[(1,4),(0,1),4],[(1,4),(3,20),4],[(0,1),(7,20),20])",
     "(4,0;(1,4),(3,4),((1,2),10))",
     "(20,0;(7,20),(13,20),((1,2),2))"),
    ("M(2,20,10,-1)",
     "((2·20,10,-1),0;[(1,4),(0,1),4],[(1,4),(1,20),4],[(0,1),(9,20),20])",
     "(4,0;(1,4),(3,4),((1,2),10))",
     "(20,0;(9,20),(11,20),((1,2),2))"),
]

G11_ROWS = [
    ("M(2,12,6,-1)",
     "((2·12,6,-1),1;[(0,1),(1,6),6])",
     "(4,3;((1,2),2))",
     "(12,1;(1,6),(5,6))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(0,1),8],[(7,8),(7,8),8],[(0,1),(1,8),8])",
     "(8,0;(1,8),(5,8),(1,4),((3,4),2),(1,2))",
     "(8,0;((1,8),2),((7,8),2),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(1,8),8],[(7,8),(0,1),8],[(0,1),(1,8),8])",
     "(8,0;(3,8),(7,8),((1,4),2),(3,4),(1,2))",
     "(8,0;((1,8),2),((7,8),2),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(0,1),8],[(7,8),(5,8),8],[(0,1),(3,8),8])",
     "(8,0;(1,8),(5,8),(1,4),((3,4),2),(1,2))",
     "(8,0;((3,8),2),((5,8),2),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(3,8),8],[(7,8),(0,1),8],[(0,1),(3,8),8])",
     "(8,0;(3,8),(7,8),((1,4),2),(3,4),(1,2))",
     "(8,0;((3,8),2),((5,8),2),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(1,8),8],[(5,8),(0,1),8],[(1,4),(1,8),8])",
     "(8,0;(1,8),(5,8),((1,4),3),(1,2))",
     "(8,1;(1,4),(3,4),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(1,8),(3,8),8],[(5,8),(0,1),8],[(1,4),(3,8),8])",
     "(8,0;(1,8),(5,8),((1,4),3),(1,2))",
     "(8,1;(1,4),(3,4),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(3,8),(1,8),8],[(3,8),(0,1),8],[(1,4),(1,8),8])",
     "(8,0;(3,8),(7,8),((3,4),3),(1,2))",
     "(8,1;(1,4),(3,4),((1,2),2))"),
    ("M(4,8,4,-1)",
     "((4·8,4,-1),0;[(3,8),(3,8),8],[(3,8),(0,1),8],[(1,4),(3,8),8])",
     "(8,0;(3,8),(7,8),((3,4),3),(1,2))",
     "(8,1;(1,4),(3,4),((1,2),2))"),
    ("M(2,20,10,11)",
     "((2·20,10,11),1;[(0,1),(1,2),2])",
     "(4,1;((1,2),10))",
     "(20,1;((1,2),2))"),
]

# Expected class counts per group at each genus.
G10_COUNTS = {"M(2,4,2,-1)": 5, "M(2,8,4,-1)": 2, "M(2,12,6,7)": 2,
              "M(2,20,10,-1)": 4}
G11_COUNTS = {"M(2,12,6,-1)": 1, "M(4,8,4,-1)": 8, "M(2,20,10,11)": 1}

# Split-lift examples: (input data set, lift genus, target label, D_G, D_F).
LIFT_EXAMPLES = [
    ("((2·12,6,-1),1;[(0,1),(1,6),6])", 21, "M(4,12,12,-1)",
     "(4,6,1;)", "(12,1;((1,6),2),((5,6),2))"),
    ("((2·20,10,-1),0;[(1,4),(0,1),4],[(1,4),(9,20),4],[(0,1),(1,20),20])",
     19, "M(4,20,20,-1)",
     "(4,0;((1,4),2),((1,2),19))", "(20,0;((1,20),2),((19,20),2))"),
    ("((2·4,2,-1),1;[(1,4),(0,1),4],[(0,1),(1,4),4],[(1,4),(1,4),4])",
     19, "M(4,4,4,-1)",
     "(4,4;((1,4),2),((1,2),3))", "(4,4;((1,4),2),((3,4),2))"),
]

# Split example whose degree is written n-first; its normal-subgroup factor
# is free and the quotient-action factor has three cone points.
SPLIT_INSTANCE = ("((11·10,11,2),0;"
                  "[(1,2),(1,11),2],[(1,5),(7,11),5],[(3,10),(0,1),10])")
SPLIT_INSTANCE_DF = "(11,2,1;)"
SPLIT_INSTANCE_DGBAR = "(10,0;(1,2),(1,5),(3,10))"

# Dicyclic-extension decision examples: (cyclic data set, exists, clause).
DICYCLIC_EXAMPLES = [
    ("(20,0;(1,20),(19,20),((1,2),2))", True, "i"),
    ("(12,1;(1,6),(5,6))", True, "ii-c"),
    ("(20,0;(1,20),(3,20),((1,2),2))", False, None),
]

# Valid non-split data sets of order 80 at genus 11 (above 4g = 44); kept as
# regression pins for the bound checker, which must report them.
OVER_BOUND_G11 = [
    "((4·20,10,3),0;[(1,8),(0,1),8],[(1,8),(1,20),8],[(1,4),(1,20),2])",
]


def meta_rows(rows):
    from metacyclic import parse_meta
    return [(label, parse_meta(text), dg, df) for label, text, dg, df in rows]
