"""Audio-haptic programming feedback engine.

Turns code navigation, editing, execution, and debugging events into
deterministic, ordered speech / sound-cue / haptic-command streams, and
fronts them through a per-session service with a simulated glove link.
"""

__version__ = "0.1.0"
