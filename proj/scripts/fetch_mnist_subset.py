#!/usr/bin/env python3
"""Build an MNIST-format IDX dataset from the `mnist` npm package (10,000
real MNIST digits, MIT licensed).

Writes train-images.idx, train-labels.idx, test-images.idx and
test-labels.idx into --out. Each digit class is split deterministically:
the first 80% of its images go to train, the rest to test.

Official MNIST IDX files work as well; copy them to the same names.
"""

import argparse
import io
import json
import random
import struct
import subprocess
import tarfile
import tempfile
from pathlib import Path


def npm_tarball(workdir: Path) -> Path:
    out = subprocess.run(["npm", "pack", "mnist@1.1.0", "--silent"], cwd=workdir,
                         check=True, capture_output=True, text=True).stdout.strip().splitlines()[-1]
    return workdir / out


def read_digits(tarball: Path):
    digits = {}
    with tarfile.open(tarball) as tar:
        for d in range(10):
            member = tar.getmember(f"package/src/digits/{d}.json")
            data = json.load(io.TextIOWrapper(tar.extractfile(member)))["data"]
            pixels = [min(255, max(0, round(v * 255))) for v in data]
            digits[d] = [bytes(pixels[i:i + 784]) for i in range(0, len(pixels), 784)]
    return digits


def write_idx(images, labels, prefix: Path):
    with open(f"{prefix}-images.idx", "wb") as f:
        f.write(struct.pack(">IIII", 0x803, len(images), 28, 28))
        for img in images:
            f.write(img)
    with open(f"{prefix}-labels.idx", "wb") as f:
        f.write(struct.pack(">II", 0x801, len(labels)))
        f.write(bytes(labels))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data/mnist")
    ap.add_argument("--tarball", help="local mnist-1.1.0.tgz; fetched with npm pack when omitted")
    ap.add_argument("--train-fraction", type=float, default=0.8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        tarball = Path(args.tarball) if args.tarball else npm_tarball(Path(tmp))
        digits = read_digits(tarball)

    train, test = [], []
    for d, imgs in digits.items():
        cut = int(len(imgs) * args.train_fraction)
        train += [(img, d) for img in imgs[:cut]]
        test += [(img, d) for img in imgs[cut:]]
    rng = random.Random(args.seed)
    rng.shuffle(train)
    rng.shuffle(test)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_idx([i for i, _ in train], [l for _, l in train], out / "train")
    write_idx([i for i, _ in test], [l for _, l in test], out / "test")
    print(f"wrote {len(train)} train and {len(test)} test images to {out}")


if __name__ == "__main__":
    main()
