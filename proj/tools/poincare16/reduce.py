import random, sys, itertools
from collections import defaultdict
random.seed(int(sys.argv[2]) if len(sys.argv)>2 else 1)
facets=set(frozenset(map(int,l.split())) for l in open(sys.argv[1]))
vt=defaultdict(set)   # vertex -> tets
def add(f):
    facets.add(f)
    for v in f: vt[v].add(f)
def rem(f):
    facets.discard(f)
    for v in f: vt[v].discard(f)
for f in list(facets):
    for v in f: vt[v].add(f)
def tets_with(s):
    s=list(s); r=set(vt[s[0]])
    for v in s[1:]: r&=vt[v]
    return r
def has_face(s): return len(tets_with(s))>0
def move32(u,v):
    T=tets_with((u,v))
    if len(T)!=3: return False
    link=set().union(*T)-{u,v}
    if len(link)!=3 or has_face(link): return False
    for f in T: rem(f)
    add(frozenset(link|{u})); add(frozenset(link|{v})); return True
def move23(tri):
    T=tets_with(tri)
    if len(T)!=2: return False
    a,b=[next(iter(f-tri)) for f in T]
    if has_face((a,b)): return False
    for f in T: rem(f)
    for e in itertools.combinations(tri,2): add(frozenset(e)|{a,b})
    return True
def move41(v):
    T=vt[v]
    if len(T)!=4: return False
    link=set().union(*T)-{v}
    if len(link)!=4 or frozenset(link) in facets: return False
    for f in list(T): rem(f)
    add(frozenset(link)); del vt[v]; return True
def verts(): return [v for v in vt if vt[v]]
def edges():
    E=set()
    for f in facets:
        for e in itertools.combinations(sorted(f),2): E.add(e)
    return E
best=None
temp=0.0
it=0
while True:
    it+=1
    changed=True
    while changed:
        changed=False
        for v in sorted(verts(), key=lambda x: len(vt[x])):
            if move41(v): changed=True
        E=list(edges()); random.shuffle(E)
        for (u,v) in E:
            if len(tets_with((u,v)))==3 and move32(u,v): changed=True
    nv=len(verts())*1000+len(facets)
    if best is None or nv<best:
        best=nv; print(it, nv, len(facets), file=sys.stderr, flush=True)
        with open('bestf_%d.txt'%nv,'w') as out:
            for f in sorted(sorted(f) for f in facets): out.write(' '.join(map(str,f))+'\n')
        if nv<=16090: break
    # random 2-3 moves (heating), biased around low-degree vertices
    k = 1+int(random.random()*3)
    done=0; tries=0
    while done<k and tries<1000:
        tries+=1
        f=random.choice(tuple(facets)); tri=frozenset(random.sample(sorted(f),3))
        if move23(tri): done+=1
    if it>200000: break
