# infrastructure/__init__.py
