#!/usr/bin/env python3
"""Build a 28x28 handwritten-digit corpus in IDX format.

The sandbox has no copy of MNIST, so the test corpus is derived from the
scikit-learn `digits` dataset (real 8x8 handwriting bundled with sklearn):
each source image is upscaled to 28x28 and expanded with small random
shifts/rotations until every class has `PER_CLASS` images. Output is a pair
of IDX files (magic 0x803 / 0x801) identical in layout to the MNIST
distribution, so the same files also serve as a stand-in for tools that
expect MNIST.

Deterministic: fixed RNG seed, fixed ordering.
"""

import struct
import sys
from pathlib import Path

import numpy as np
from scipy import ndimage
from sklearn.datasets import load_digits

PER_CLASS = 520
SEED = 12345


def upscale(img8):
    img = ndimage.zoom(img8 / 16.0, 28 / 8, order=3)
    return np.clip(img, 0.0, 1.0)


def augment(img, rng):
    angle = rng.uniform(-12.0, 12.0)
    out = ndimage.rotate(img, angle, reshape=False, order=1, mode="constant")
    shift = rng.uniform(-2.0, 2.0, size=2)
    out = ndimage.shift(out, shift, order=1, mode="constant")
    return np.clip(out, 0.0, 1.0)


def main(out_dir):
    rng = np.random.default_rng(SEED)
    data = load_digits()
    images = data.images
    labels = data.target

    per_class_imgs = []
    per_class_lbls = []
    for cls in range(10):
        src = images[labels == cls]
        base = [upscale(im) for im in src]
        pool = list(base)
        i = 0
        while len(pool) < PER_CLASS:
            pool.append(augment(base[i % len(base)], rng))
            i += 1
        per_class_imgs.extend(pool[:PER_CLASS])
        per_class_lbls.extend([cls] * PER_CLASS)

    order = rng.permutation(len(per_class_imgs))
    imgs = np.stack([per_class_imgs[i] for i in order])
    lbls = np.array([per_class_lbls[i] for i in order], dtype=np.uint8)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    img_bytes = np.round(imgs * 255.0).astype(np.uint8)
    with open(out_dir / "digits-images-idx3-ubyte", "wb") as f:
        f.write(struct.pack(">IIII", 0x803, len(img_bytes), 28, 28))
        f.write(img_bytes.tobytes())
    with open(out_dir / "digits-labels-idx1-ubyte", "wb") as f:
        f.write(struct.pack(">II", 0x801, len(lbls)))
        f.write(lbls.tobytes())

    print(f"wrote {len(lbls)} images to {out_dir}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
