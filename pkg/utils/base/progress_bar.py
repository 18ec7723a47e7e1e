"""
Module to create a progress bar in the terminal

Source: https://stackoverflow.com/questions/3173320/text-progress-bar-in-terminal-with-block-characters
"""
import sys


def progressBar(iterable, prefix='', suffix='', decimals=1, length=40, fill='█', printEnd="\r",
                enabled=True, stream=None):
    """
    Call in a loop to create terminal progress bar
    @params:
        iterable    - Required  : sized iterable object (Iterable)
        prefix      - Optional  : prefix string (Str)
        suffix      - Optional  : suffix string (Str)
        decimals    - Optional  : positive number of decimals in percent complete (Int)
        length      - Optional  : character length of bar (Int)
        fill        - Optional  : bar fill character (Str)
        printEnd    - Optional  : end character (e.g. "\r", "\r\n") (Str)
        enabled     - Optional  : draw nothing when False (Bool)
        stream      - Optional  : output stream, stderr by default
    """
    if not enabled:
        yield from iterable
        return

    stream = stream or sys.stderr
    total = len(iterable)

    def printProgressBar(iteration):
        fraction = iteration / float(total) if total else 1.0
        percent = ("{0:." + str(decimals) + "f}").format(100 * fraction)
        filledLength = int(length * fraction)
        bar = fill * filledLength + '-' * (length - filledLength)
        print(f'\r{prefix} |{bar}| {percent}% {suffix}', end=printEnd, file=stream)
    # Initial Call
    printProgressBar(0)
    # Update Progress Bar
    for i, item in enumerate(iterable):
        yield item
        printProgressBar(i + 1)
    # Print New Line on Complete
    print(file=stream)
