import java.util.Collections;
import java.util.List;

public class ListBubble {
    public void sort(List<Integer> list) {
        for (int pass = 0; pass < list.size(); pass++) {
            for (int i = 0; i < list.size() - 1; i++) {
                if (list.get(i) > list.get(i + 1)) {
                    Collections.swap(list, i, i + 1);
                }
            }
        }
    }
}
