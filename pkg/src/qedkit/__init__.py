"""qedkit: exact certificates, construction replay and numeric oracles for a
corpus of 21 classic oral-exam problems."""

__version__ = "0.1.0"
