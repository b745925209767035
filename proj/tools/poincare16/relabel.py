# Rewrites an integer facet list as "facet vNN ..." lines, numbering vertices in increasing order.
import sys

facets = [tuple(map(int, line.split())) for line in open(sys.argv[1]) if line.strip()]
vertices = sorted({v for f in facets for v in f})
name = {v: "v%02d" % (i + 1) for i, v in enumerate(vertices)}
for f in sorted(tuple(sorted(name[v] for v in f)) for f in facets):
    print("facet", *f)
