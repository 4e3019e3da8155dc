from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("bvkit")
except PackageNotFoundError:
    __version__ = "unknown"
