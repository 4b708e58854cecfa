"""Emotion-aware peer support board.

Pipeline modules (textproc, keyrank, emoclass) feed the board modules
(scaffold, community) behind one HTTP service (api) and CLI (cli).
"""

__version__ = "0.1.0"
