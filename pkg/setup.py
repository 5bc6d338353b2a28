from setuptools import setup

NAME = 'pykkboot'

# Everything is pure Python; metadata lives in pyproject.toml
setup(
    name = NAME,
)
