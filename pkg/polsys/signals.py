from blinker import Namespace

signals = Namespace()

#: sent by the experiment runner when all trials of one system are counted
system_finished = signals.signal('system-finished')

#: sent after an experiment row was written
row_written = signals.signal('row-written')
