"""Regenerates data/hr.csv: a synthetic heart-rate trace of an undulating run."""

import csv
import pathlib

import numpy as np

# (duration in samples, bpm at segment start, bpm at segment end)
PROFILE = [
    (120, 95, 140),
    (240, 148, 148),
    (90, 165, 172),
    (150, 150, 150),
    (60, 178, 182),
    (200, 158, 158),
    (80, 170, 176),
    (160, 152, 152),
    (40, 184, 186),
    (160, 135, 118),
]


def main() -> None:
    rng = np.random.default_rng(20141104)
    bpm = np.concatenate([np.linspace(a, b, k) for k, a, b in PROFILE])
    # Slowly varying drift plus beat-to-beat jitter, rounded like a chest strap.
    drift = np.convolve(rng.normal(0, 1.5, bpm.size), np.ones(15) / 15, mode="same")
    values = np.round(bpm + drift + rng.normal(0, 2.0, bpm.size))
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "hr.csv"
    with out.open("w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["time", "bpm"])
        for i, v in enumerate(values):
            w.writerow([2 * i, int(v)])


if __name__ == "__main__":
    main()
