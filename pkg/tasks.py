import sys
from pathlib import Path

from docutils.core import publish_cmdline
from invoke import task
from rellu import initialize_labels, ReleaseNotesGenerator, Version
from rellu.tasks import clean
from robot.libdoc import libdoc


assert Path.cwd() == Path(__file__).parent


REPOSITORY = 'optimalkernellibrary/OptimalKernelLibrary'
VERSION_PATH = Path('src/OptimalKernelLibrary/__init__.py')
RELEASE_NOTES_PATH = Path('docs/OptimalKernelLibrary-{version}.rst')
RELEASE_NOTES_TITLE = 'OptimalKernelLibrary {version}'
RELEASE_NOTES_INTRO = '''
OptimalKernelLibrary_ is a `Robot Framework`_ library and command line tool
for constructing variance-optimal signed kernels and using them in kernel
density estimation. OptimalKernelLibrary {version} is a new release with
**UPDATE** enhancements and bug fixes.

If you have pip_ installed, just run

::

   pip install --upgrade robotframework-optimalkernellibrary

to install the latest available release or use

::

   pip install robotframework-optimalkernellibrary=={version}

to install exactly this version.

OptimalKernelLibrary {version} was released on {date}. It supports Python
**ADD VERSIONS**, NumPy **ADD VERSIONS** and Robot Framework **ADD VERSIONS**.

.. _Robot Framework: http://robotframework.org
.. _OptimalKernelLibrary: https://pypi.org/project/robotframework-optimalkernellibrary
.. _pip: http://pip-installer.org
'''


@task
def kw_docs(ctx):
    """Generates the library keyword documentation

    Documentation is generated by using the Libdoc tool.
    """
    libdoc(str(Path('src/OptimalKernelLibrary')),
           str(Path('docs/OptimalKernelLibrary.html')))


@task
def kernel_tables(ctx, max_m=4):
    """Writes closed-form kernel tables and descriptors under ``docs/kernels``.

    Args:
        max_m: Largest integer order parameter to export.
    """
    sys.path.insert(0, str(Path('src').absolute()))
    from OptimalKernelLibrary.cli import main
    output = Path('docs/kernels')
    output.mkdir(parents=True, exist_ok=True)
    for m in range(1, int(max_m) + 1):
        path = output / ('poly-m%d.txt' % m)
        main(['kernel', '--m', str(m), '--output', str(path)])
        print(path.absolute())
    for beta in ('1.5', '2.5'):
        path = output / ('frac-beta%s.txt' % beta)
        main(['kernel', '--beta', beta, '--output', str(path)])
        print(path.absolute())


@task
def project_docs(ctx):
    """Generate project documentation from ``README.rst``."""
    args = ['README.rst',
            'docs/index.html']
    publish_cmdline(writer_name='html5', argv=args)
    print(Path(args[-1]).absolute())


@task
def set_version(ctx, version):
    """Set project version in ``src/OptimalKernelLibrary/__init__.py`` file.

    Args:
        version: Project version to set or ``dev`` to set development version.

    Following PEP-440 compatible version numbers are supported:
    - Final version like 1.0 or 1.1.2.
    - Alpha, beta or release candidate with ``a``, ``b`` or ``rc`` postfix,
      respectively, and an incremented number like 1.0a1 or 1.0.1rc1.
    - Development version with ``.dev`` postfix and an incremented number like
      1.0.dev1 or 1.1a1.dev2.
    """
    version = Version(version, VERSION_PATH)
    version.write()
    print(version)


@task
def print_version(ctx):
    """Print the current project version."""
    print(Version(path=VERSION_PATH))


@task
def release_notes(ctx, version=None, username=None, password=None, write=False):
    """Generates release notes based on issues in the issue tracker.

    Args:
        version:  Generate release notes for this version. If not given,
                  generated them for the current version.
        username: GitHub username.
        password: GitHub password.
        write:    When set to True, write release notes to a file overwriting
                  possible existing file. Otherwise just print them to the
                  terminal.
    """
    version = Version(version, VERSION_PATH)
    file = RELEASE_NOTES_PATH if write else sys.stdout
    generator = ReleaseNotesGenerator(REPOSITORY, RELEASE_NOTES_TITLE,
                                      RELEASE_NOTES_INTRO)
    generator.generate(version, username, password, file)


@task
def init_labels(ctx, username=None, password=None):
    """Initialize project by setting labels in the issue tracker.

    Should only be executed once when taking ``rellu`` tooling to use or
    when labels it uses have changed.
    """
    initialize_labels(REPOSITORY, username, password)
