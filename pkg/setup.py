# The command line tool and the library are distributed together; the
# launcher in scripts/ only calls benneytoda.cli.start.

from setuptools import setup

setup(name='benneytoda',
      version='0.1.0',
      description='Hodograph solutions of the Benney and dToda hierarchies',
      author='benneytoda developers',
      license='Apache License, Version 2.0',
      packages=['benneytoda'],
      scripts=['scripts/benneytoda'],
      install_requires=['numpy', 'tornado', 'psutil'],
      )
