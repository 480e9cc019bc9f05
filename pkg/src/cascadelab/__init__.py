"""Cascade simulation and message-log forensics for spreading-group detection.

The package has two halves that share one log format:

* simulation — preferential-attachment networks with a planted high-density
  "spreading group", seed selection policies, and a retention-decay
  independent cascade (``netgen``, ``cascade``, ``sweep``);
* analytics — repetition counting, power-law fitting, high/low message
  partitioning, earliest-spreader recurrence curves, and per-user spread
  statistics over tweet-style logs (``tweetlog``, ``spreadstats``).

``cascadelab.cli`` wires both into reproducible command-line pipelines.
"""

__version__ = "0.1.0"
