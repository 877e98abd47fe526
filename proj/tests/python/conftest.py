import os
import sys

# run against the in-tree build when the wheel is not installed
HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(os.path.dirname(HERE))
for cand in (os.path.join(ROOT, "build"), os.path.join(ROOT, "build", "Release")):
    if os.path.isdir(cand):
        sys.path.insert(0, cand)
os.environ.setdefault("LACUNA_DATA", os.path.join(ROOT, "data"))
