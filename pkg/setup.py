from setuptools import setup, find_packages

setup(
    name="curvilinear-guarding-python-lib",
    version="0.1.0",
    description="Python library to guard piecewise-convex polygons through 2-dominating sets of triangulation graphs",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "dacite>=1.9.2",
        "jinja2>=3.1.6",
        "networkx>=3.4",
        "numpy>=2.1.0",
        "pandas>=2.3.0",
        "pyyaml>=6.0.2",
        "shapely>=2.1.2",
        "tqdm>=4.67.1",
    ],
    entry_points={
        "console_scripts": ["curvilinear-guard=curvilinearguard.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
    ],
)
