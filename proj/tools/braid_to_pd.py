#!/usr/bin/env python3
"""Write the PD code of the closure of a positive braid word.

usage: braid_to_pd.py STRANDS GENERATOR...   e.g. braid_to_pd.py 3 1 2 1 2

Generator i is a positive crossing where strand i+1 passes under strand i.
"""
import sys


def braid_to_pd(strands, word):
    next_label = 1
    first = {}
    current = {}
    for pos in range(1, strands + 1):
        first[pos] = current[pos] = next_label
        next_label += 1
    crossings = []
    for i in word:
        new_left, new_right = next_label, next_label + 1
        next_label += 2
        # incoming under (SE), then counterclockwise: NE, NW, SW
        crossings.append([current[i + 1], new_right, new_left, current[i]])
        current[i], current[i + 1] = new_left, new_right
    closing = {current[pos]: first[pos] for pos in current}
    crossings = [[closing.get(x, x) for x in c] for c in crossings]
    used = sorted({x for c in crossings for x in c})
    renumber = {old: k + 1 for k, old in enumerate(used)}
    return [[renumber[x] for x in c] for c in crossings]


def main():
    strands = int(sys.argv[1])
    word = [int(g) for g in sys.argv[2:]]
    pd = braid_to_pd(strands, word)
    print("PD[" + ",".join("X[" + ",".join(map(str, c)) + "]" for c in pd) + "]")


if __name__ == "__main__":
    main()
