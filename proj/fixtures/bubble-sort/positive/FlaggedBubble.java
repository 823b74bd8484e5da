public class FlaggedBubble {
    void sort(double[] data) {
        boolean swapped = true;
        do {
            swapped = false;
            for (int i = 1; i < data.length; i++) {
                if (data[i - 1] > data[i]) {
                    double tmp = data[i - 1];
                    data[i - 1] = data[i];
                    data[i] = tmp;
                    swapped = true;
                }
            }
        } while (swapped);
    }
}
