from setuptools import setup

setup(
    name="ufo7",
    version="0.1.0",
    packages=["ufo7"],
    description="Simple modules of the Drinfeld double of the Nichols algebra ufo(7) over Q(z12)",
    install_requires=[
        "transformers>=4.30",
        "numpy>=1",
        "tqdm",
        "pandas>=1",
        "cached_property",  # for Py37
    ],
    extras_require={"test": ["pytest"]},
    package_data={"ufo7": ["data/*"]},
    include_package_data=True,
    entry_points={"console_scripts": ["ufo7=ufo7.cli:main"]},
    license="MIT",
)
