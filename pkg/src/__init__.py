"""agiform-sos: exact SOS decisions and mediation witnesses for agiforms."""

__version__ = "0.1.0"
