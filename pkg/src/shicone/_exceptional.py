"""Hand-transcribed adjacency for the exceptional digraphs.

Coordinates are planar layout positions; removed edges are simply absent.
Box entries give a label in segment shorthand and the box centre.
"""

G2_EDGES = """
(0,1)-(1,1) (0,1)-(0,2) (1,1)-(1,2) (0,2)-(1,2) (1,2)-(2,2) (0,2)-(0,3)
(1,2)-(1,3) (2,2)-(2,3) (0,3)-(1,3) (2,3)-(1,3) (0,3)-(0,4) (1,3)-(1,4)
(0,4)-(1,4) (0,4)-(0,5) (1,4)-(1,5) (0,5)-(1,5) (0,5)-(0,6) (1,5)-(1,6)
(0,6)-(1,6)
"""

G2_BOXES = """
11 0.5,1.5
12 0.5,2.5
22 1.5,2.5
12,11 0.5,3.5
12,11,11 0.5,4.5
12,12,11 0.5,5.5
"""

G2_SOURCE, G2_SINK = (0, 1), (1, 6)

F4_EDGES = """
(0,3)-(0,5) (1,3)-(5.5,5) (2,3)-(11,5) (3,3)-(12,5)
(0,6)-(0,8) (1,6)-(4,8) (2,6)-(8,8) (5.5,6)-(6,8) (6.5,6)-(10,8) (11,6)-(11,8)
(0,9)-(0,11) (1,9)-(1,11) (2,9)-(2,11) (3,9)-(3,11) (6,9)-(2,11) (7,9)-(3,11) (11,9)-(3,11)

(0,0)-(0,1) (0,1)-(0,2) (0,2)-(0,3) (0,0)-(1,0) (0,1)-(1,1) (0,2)-(1,2)
(1,0)-(1,1) (1,1)-(1,2) (1,2)-(1,3) (1,1)-(2,1) (1,2)-(2,2)
(2,1)-(2,2) (2,2)-(2,3) (2,2)-(3,2) (3,2)-(3,3)

(0,5)-(1,5) (1,5)-(2,5) (2,5)-(3,5) (3,5)-(4,5)
(0,5)-(0,6) (1,5)-(1,6) (2,5)-(2,6) (3,5)-(3,6) (4,5)-(4,6)
(4,6)-(3,6) (3,6)-(2,6)

(5.5,5)-(6.5,5) (6.5,5)-(7.5,5) (7.5,5)-(8.5,5)
(5.5,5)-(5.5,6) (6.5,5)-(6.5,6) (7.5,5)-(7.5,6) (8.5,5)-(8.5,6)
(8.5,6)-(7.5,6) (7.5,6)-(6.5,6)

(11,5)-(12,5) (12,5)-(13,5) (11,5)-(11,6) (12,5)-(12,6) (13,5)-(13,6)
(13,6)-(12,6) (12,6)-(11,6)

(0,8)-(1,8) (1,8)-(2,8) (2,8)-(3,8)
(0,8)-(0,9) (1,8)-(1,9) (2,8)-(2,9) (3,8)-(3,9)

(4,8)-(5,8) (5,8)-(6,8) (6,8)-(7,8)
(4,8)-(4,9) (5,8)-(5,9) (6,8)-(6,9) (7,8)-(7,9)
(4,9)-(5,9) (5,9)-(6,9)

(8,8)-(9,8) (9,8)-(10,8) (10,8)-(11,8)
(8,8)-(8,9) (9,8)-(9,9) (10,8)-(10,9) (11,8)-(11,9)
(8,9)-(9,9) (9,9)-(10,9) (10,9)-(11,9)

(0,11)-(0,12) (0,12)-(0,13) (0,13)-(0,14) (0,14)-(0,15) (0,15)-(0,16) (0,16)-(0,17)
(0,11)-(1,11) (0,12)-(1,12) (0,13)-(1,13) (0,14)-(1,14) (0,15)-(1,15) (0,16)-(1,16) (0,17)-(1,17)
(1,11)-(1,12) (1,12)-(1,13) (1,13)-(1,14) (1,14)-(1,15) (1,15)-(1,16) (1,16)-(1,17)
(1,11)-(2,11) (1,12)-(2,12) (1,13)-(2,13) (2,14)-(1,14)
(2,11)-(2,12) (2,12)-(2,13) (2,13)-(2,14)
(2,11)-(3,11) (2,12)-(3,12) (3,13)-(2,13)
(3,11)-(3,12) (3,12)-(3,13)
"""

F4_BOXES = """
11 0.5,0.5
12 0.5,1.5
13 0.5,2.5
22 1.5,1.5
23 1.5,2.5
33 2.5,2.5
14 0.5,5.5
24 1.5,5.5
34 2.5,5.5
44 3.5,5.5
14 5,5.5
24 6,5.5
34 7,5.5
44 8,5.5
14 9.5,5.5
24 10.5,5.5
34 11.5,5.5
44 12.5,5.5
13,12 0.5,8.5
13,22 1.5,8.5
23,22 2.5,8.5
13,12 4.5,8.5
13,22 5.5,8.5
23,22 6.5,8.5
13,12 8.5,8.5
13,22 9.5,8.5
23,22 10.5,8.5
14,12 0.5,11.5
14,13 0.5,12.5
14,13,22 0.5,13.5
14,13,22,22 0.5,14.5
14,13,23,22 0.5,15.5
14,14,23,22 0.5,16.5
14,22 1.5,11.5
14,23 1.5,12.5
14,23,22 1.5,13.5
24,22 2.5,11.5
24,23 2.5,12.5
"""

F4_SOURCE, F4_SINK = (0, 0), (1, 17)

# the layout data numbers the F4 nodes with alpha_1, alpha_2 short
F4_RELABEL = (3, 2, 1, 0)

# layout regions -> (part, x offset)
F4_PARTS = [
    # (y range, x range, part, x shift)
    ((0, 3), (0, 3), (1, 0), 0),
    ((5, 6), (0, 4), (2, 1), 0),
    ((5, 6), (4.5, 8.5), (2, 2), 4.5),
    ((5, 6), (9, 13), (2, 3), 9),
    ((8, 9), (0, 3), (3, 1), 0),
    ((8, 9), (4, 7), (3, 2), 4),
    ((8, 9), (8, 11), (3, 3), 8),
    ((11, 17), (0, 3), (4, 0), 0),
]
