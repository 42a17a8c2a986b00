import os, glob


def teardown_function(function):
    [os.remove(x) for x in glob.glob("*.csv")]


def test_cleanup():
    pass
