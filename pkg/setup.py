from setuptools import setup

from pathlib import Path
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text(encoding="utf-8")

setup(
    name='NlpToolkit-LinkCommunity',
    version='1.0.0',
    packages=['LinkCommunity', 'LinkCommunity.Parameter', 'LinkCommunity.Graph', 'LinkCommunity.Cost',
              'LinkCommunity.Landscape', 'LinkCommunity.Search', 'LinkCommunity.Memetic', 'LinkCommunity.Cli'],
    url='',
    license='',
    author='',
    author_email='',
    description='Overlapping link community detection by memetic minimisation of the ratio node-cut',
    install_requires=['NlpToolkit-Math', 'NlpToolkit-DataStructure', 'NlpToolkit-Util', 'numpy', 'networkx'],
    extras_require={'test': ['hypothesis']},
    entry_points={'console_scripts': ['linkcommunity=LinkCommunity.Cli.LinkCommunityCli:main']},
    long_description=long_description,
    long_description_content_type='text/markdown'
)
