import regina, sys
t = regina.Example3.poincare()
t.subdivide(); t.subdivide()
facets = []
for tet in t.tetrahedra():
    facets.append(tuple(sorted(tet.vertex(i).index() for i in range(4))))
print(len(facets), t.countVertices(), len(set(facets)), all(len(set(f))==4 for f in facets), file=sys.stderr)
for f in facets: print(*f)
