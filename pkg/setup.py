from setuptools import setup, find_packages

setup(
    name="vlcsim",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        'numpy',
        'pandas',
        'pydantic>=2',
        'joblib',
        'tqdm',
        'python-dotenv'
    ],
    entry_points={
        'console_scripts': [
            'vlcsim=src.cli:main',
        ],
    },
)
