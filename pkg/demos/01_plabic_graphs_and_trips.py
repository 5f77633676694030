"""Build a plabic graph bridge by bridge and watch its trips and face labels.

A plabic graph lives in a disk: boundary vertices 1..n clockwise, bicolored
internal vertices, and a counterclockwise rotation at each internal vertex
standing in for the planar embedding.  Trips walk through the graph turning
maximally right at black vertices and maximally left at white ones; they
induce a permutation of the boundary, and depositing each trip's endpoint into
the faces on its left labels every face with a k-subset of [n].
"""

from positroids import perm, plabic


def show(G, note):
    print(f"--- {note}")
    _, sigma = plabic.trips(G)
    print("trip permutation:", sigma.perm,
          "white fixed points:", sorted(sigma.white_fixed))
    labeling = plabic.face_labeling(G, "target")
    for i, lab in enumerate(labeling.labels):
        kind = "boundary" if labeling.faces.faces[i].boundary else "internal"
        print(f"  face {''.join(map(str, sorted(lab)))}  [{kind}]")
    print()


# Start from the lollipop graph for Gr(2,5): white lollipops at 1, 2 and black
# ones at 3, 4, 5.  Its single face is labeled {1,2} by the white lollipops.
G = plabic.lollipop_graph(2, 5)
show(G, "lollipop graph, k=2, n=5")

# The Grassmannian permutation x = (3,5,1,2,4) has columnar word s4 s2 s3 s1 s2
# (reading the columns of its shape), i.e. the bridge sequence
# (2 3), (1 2), (3 4), (2 3), (4 5).  Each bridge adds one face and composes
# the trip permutation with the transposition.
x = (3, 5, 1, 2, 4)
for i in perm.columnar_expression(x, 2):
    G = plabic.add_bridge(G, i, i + 1)
    show(G, f"after bridge ({i} {i + 1})")

# The finished bridge graph has trip permutation x^{-1} and face labels given
# by the rectangles inside the shape of x([2]) -- compare with the Grassmann
# necklace of the trip permutation:
_, sigma = plabic.trips(G)
print("Grassmann necklace:",
      [sorted(J) for J in perm.grassmann_necklace(sigma)])

# Local moves preserve the trip permutation.  A square move at the single
# internal face {1,3} exchanges it for the complementary label {2,4}... let's
# see it happen.
H = plabic.square_move(G, {1, 3})
show(H, "after the square move at face 13")

print("reducedness witnesses:", plabic.reducedness_witness_checks(H))
