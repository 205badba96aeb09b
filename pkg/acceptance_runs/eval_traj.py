import json, os, sys
import numpy as np
from onetower.encoder import load_checkpoint
from onetower.evalsuite import eval_features, retrieval_recall, modality_gap
from onetower.synthgen import load_dataset

run = sys.argv[1]
_, records = load_dataset("eval1k.bin")
images = [i for _, i, _ in records]
texts = [t for _, _, t in records]
cks = sorted(d for d in os.listdir(run) if d.startswith("ckpt-e")) + ["ckpt-final"]
for ck in cks:
    path = os.path.join(run, ck)
    if not os.path.isdir(path):
        continue
    w, cfg, meta = load_checkpoint(path)
    fi = eval_features(images, w, cfg)
    ft = eval_features(texts, w, cfg)
    r = retrieval_recall(ft, fi, ks=(1, 5)).recall
    g = modality_gap(fi, ft)
    print(f"{ck:12s} step {meta['step']:5d}  t2i R@1 {r[1]:.3f} R@5 {r[5]:.3f}  "
          f"align {g.pair_alignment:+.3f}  sep {g.modality_separability:.3f}  "
          f"centroid {g.centroid_distance:.3f}", flush=True)
