"""5x7 bitmap digit font shared by the scene renderer and the OCR corpus.

Plates carry numeric registrations, so only digits are defined.  Glyphs are
stored as 7 rows of 5 cells; row 0 is the top of the glyph.
"""

from __future__ import annotations

import numpy as np

GLYPH_ROWS = 7
GLYPH_COLS = 5

_PATTERNS = {
    "0": (".###.",
          "#...#",
          "#..##",
          "#.#.#",
          "##..#",
          "#...#",
          ".###."),
    "1": ("..#..",
          ".##..",
          "..#..",
          "..#..",
          "..#..",
          "..#..",
          ".###."),
    "2": (".###.",
          "#...#",
          "....#",
          "...#.",
          "..#..",
          ".#...",
          "#####"),
    "3": (".###.",
          "#...#",
          "....#",
          "..##.",
          "....#",
          "#...#",
          ".###."),
    "4": ("...#.",
          "..##.",
          ".#.#.",
          "#..#.",
          "#####",
          "...#.",
          "...#."),
    "5": ("#####",
          "#....",
          "####.",
          "....#",
          "....#",
          "#...#",
          ".###."),
    "6": ("..##.",
          ".#...",
          "#....",
          "####.",
          "#...#",
          "#...#",
          ".###."),
    "7": ("#####",
          "....#",
          "...#.",
          "...#.",
          "..#..",
          "..#..",
          "..#.."),
    "8": (".###.",
          "#...#",
          "#...#",
          ".###.",
          "#...#",
          "#...#",
          ".###."),
    "9": (".###.",
          "#...#",
          "#...#",
          ".####",
          "....#",
          "...#.",
          ".##.."),
}

ALPHABET = "0123456789"

# (10, 7, 5) boolean stack indexed by ALPHABET position.
_BITMAPS = np.array(
    [[[c == "#" for c in row] for row in _PATTERNS[ch]] for ch in ALPHABET],
    dtype=bool,
)

_INDEX = {ch: i for i, ch in enumerate(ALPHABET)}


def glyph_mask(char: str) -> np.ndarray:
    """Return the (7, 5) boolean bitmap of one digit."""
    if char not in _INDEX:
        raise KeyError(f"no glyph for character {char!r}; supported: {ALPHABET}")
    return _BITMAPS[_INDEX[char]].copy()


def validate_text(text: str) -> str:
    for ch in text:
        if ch not in _INDEX:
            raise ValueError(f"plate text may only contain digits, got {text!r}")
    return text


def text_ink(text: str, cell: np.ndarray, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Vectorized glyph lookup for the renderer.

    ``cell`` selects the character of ``text`` per sample, ``gx``/``gy`` are
    in-glyph coordinates in [0, 1) (gy = 0 at the glyph top).  Samples with
    an out-of-range cell index return False.
    """
    indices = np.array([_INDEX[ch] for ch in text], dtype=int)
    valid = (cell >= 0) & (cell < len(text)) & (gx >= 0) & (gx < 1) & (gy >= 0) & (gy < 1)
    out = np.zeros(cell.shape, dtype=bool)
    if not np.any(valid):
        return out
    cols = np.clip((gx[valid] * GLYPH_COLS).astype(int), 0, GLYPH_COLS - 1)
    rows = np.clip((gy[valid] * GLYPH_ROWS).astype(int), 0, GLYPH_ROWS - 1)
    out[valid] = _BITMAPS[indices[cell[valid]], rows, cols]
    return out
