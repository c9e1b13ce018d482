"""Configuration modules for fplab."""
