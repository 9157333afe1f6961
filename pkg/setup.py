#! /usr/bin/env python
# adapted from sklearn

import os
import shutil
import glob
from setuptools import setup, find_packages, Command
import skorohod


class CleanCommand(Command):
    description = "Remove build directories and egg-info"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        for path in glob.glob("build") + glob.glob("*.egg-info"):
            if os.path.exists(path):
                print("Removing '" + path + "'")
                shutil.rmtree(path)


def setup_package():
    metadata = dict(
        name="skorohod",
        description="Conformal Skorohod embeddings of planar Brownian motion",
        long_description=open("README.md").read(),
        long_description_content_type="text/markdown",
        license="BSD 3-clause",
        version=skorohod.__version__,
        packages=find_packages(exclude=["*.test"]),
        cmdclass={"clean": CleanCommand},
        entry_points={
            "console_scripts": ["skorohod-run = skorohod.cli.main:main"]},
        python_requires=">=3.6",
        install_requires=["numpy", "scipy", "PyYAML", "matplotlib"],
        extras_require={"test": ["pytest"]},
        )
    setup(**metadata)


if __name__ == "__main__":
    setup_package()
