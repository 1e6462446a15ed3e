# -*- coding: utf-8 -*-

"""
jetforge.task_queue
~~~~~~~~~~~~~~~~~~~

把互不相关的任务（例如 (m, m') 对）分给若干线程处理，结果按任务顺序返回。
"""

import sys
import logging
import threading
import traceback

from six.moves import queue

logger = logging.getLogger(__name__)


class TaskQueue(object):
    """一个生产者线程按顺序放入 (序号, 任务)，`num_threads` 个消费者线程对每个任务调用 `worker` 。

    任何线程抛出的第一个异常会在 :meth:`map` 中重新抛出，其余消费者在取下一个任务前停止。

    :param worker: 以单个任务为参数的可调用对象
    :param int num_threads: 消费者线程数，小于1时按1处理
    """
    def __init__(self, worker, num_threads):
        self.__worker = worker
        self.__num_threads = max(1, num_threads)

        self.__threads = []
        self.__queue = None
        self.__results = {}

        self.__lock = threading.Lock()
        self.__exc_info = None
        self.__exc_stack = ''

    def map(self, tasks):
        """处理全部任务，返回与 `tasks` 顺序一致的结果列表。"""
        tasks = list(tasks)
        self.__threads = []
        self.__results = {}
        self.__exc_info = None

        # unbounded, so the producer never blocks on dead consumers
        self.__queue = queue.Queue()

        self.__start(self.__produce, tasks)
        for _ in range(self.__num_threads):
            self.__start(self.__consume)

        while any(t.is_alive() for t in self.__threads):
            for t in self.__threads:
                t.join(1)

        if self.__exc_info:
            logger.error('An exception was thrown by a task, backtrace: {0}'.format(self.__exc_stack))
            raise self.__exc_info[1]

        logger.debug("task queue done, tasks: {0}, threads: {1}".format(len(tasks), self.__num_threads))
        return [self.__results[k] for k in range(len(tasks))]

    def ok(self):
        with self.__lock:
            return self.__exc_info is None

    def __start(self, target, *args):
        thread = threading.Thread(target=target, args=args)
        thread.daemon = True
        thread.start()
        self.__threads.append(thread)

    def __produce(self, tasks):
        try:
            for item in enumerate(tasks):
                if not self.ok():
                    break
                self.__queue.put(item)
        except:
            self.__record(sys.exc_info())
        finally:
            for _ in range(self.__num_threads):
                self.__queue.put(None)

    def __consume(self):
        try:
            while self.ok():
                item = self.__queue.get()
                if item is None:
                    return
                k, task = item
                result = self.__worker(task)
                with self.__lock:
                    self.__results[k] = result
        except:
            self.__record(sys.exc_info())

    def __record(self, exc_info):
        with self.__lock:
            if self.__exc_info is None:
                self.__exc_info = exc_info
                self.__exc_stack = traceback.format_exc()


def run_tasks(tasks, worker, num_threads):
    """``TaskQueue(worker, num_threads).map(tasks)`` 的简写。"""
    return TaskQueue(worker, num_threads).map(tasks)
