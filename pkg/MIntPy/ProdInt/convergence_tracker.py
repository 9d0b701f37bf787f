import matplotlib.pyplot as plt


class ConvergenceTracker:
    def __init__(self):
        """A ConvergenceTracker instance that tracks the successive differences of a refinement loop (one value per
        refinement level or per approximant index), together with optional named series evaluated at the same steps.
        It is used by :obj:`MIntPy.ProdInt.ProductIntegrator` and :obj:`MIntPy.Potapov.ApproximantBuilder`."""
        self.steps = []
        self.differences = []
        self.series = {}

    def add_step(self, step, difference):
        """Adds the difference observed at a new refinement step.

        Args:
            step: An integer identifying the step (refinement level or approximant index).
            difference: A nonnegative number representing the observed difference or error.
        """
        self.steps.append(step)
        self.differences.append(difference)

    def add_series_value(self, name, value):
        """Adds a value to a named series; series values are aligned with the tracked steps."""
        if name not in self.series:
            self.series[name] = []
        self.series[name].append(value)

    def last_difference(self):
        return self.differences[-1] if len(self.differences) > 0 else None

    def is_nonincreasing(self, slack=0.0):
        """Checks if the tracked differences never increase by more than slack."""
        return all(b <= a + slack for a, b in zip(self.differences, self.differences[1:]))

    def reset(self):
        self.steps = []
        self.differences = []
        self.series = {}

    def display_graph(self, title=None, log_scale=True, block=False):
        """Displays the tracked differences per step and, if they exist, the named series.

        Args:
            title: Optional figure title. Default: None.
            log_scale: A boolean indicating if the y axis should use a logarithmic scale. Default: True.
            block: A boolean indicating whether the displayed graph should block code execution or not. Default: False.
        """
        if len(self.series) > 0:
            fig, axes = plt.subplots(nrows=2, ncols=1)
        else:
            fig, axes = plt.subplots(nrows=1, ncols=1)
            axes = [axes]

        fig.suptitle('Convergence per Step' if title is None else title)
        axes[0].set_ylabel('Difference', fontsize=12)
        axes[0].plot(self.steps, self.differences, marker='o')
        if log_scale:
            axes[0].set_yscale('log')

        if len(axes) > 1:
            axes[1].set_ylabel('Value', fontsize=12)
            for name in self.series:
                try:
                    axes[1].plot(self.steps, self.series[name], label=name)
                except ValueError:
                    raise Exception(f'Series {name} is not defined for all tracked steps: number of steps: '
                                    f'{len(self.steps)}, number of values: {len(self.series[name])}')
            axes[1].legend()

        axes[-1].set_xlabel('Step', fontsize=12)
        plt.show(block=block)
