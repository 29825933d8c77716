# Keeps the tests directory importable (support.py holds shared helpers).
